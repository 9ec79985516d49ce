#pragma once

#include <map>
#include <string>
#include <vector>

#include "medial/extended_graph.hpp"
#include "medial/free_group.hpp"
#include "medial/invariants.hpp"
#include "medial/medial_model.hpp"

namespace medial {

enum class Block { Lambda, Y, Q };

/**
 * 1-complex carrying the fundamental group of a fin-free component: the
 * Y-network, one hub per sheet, a spoke from the hub to the start of each
 * attached boundary walk, and loops at the hub for the rest of the sheet's
 * topology (g̃ loops when the sheet has no edge curve, g̃ + e - 1 otherwise).
 *
 * Edge ids: Y-edges first in Y-id order, then spokes in sheet and boundary
 * order, then loops. The maximal tree is grown by increasing edge id, so it
 * uses Y-edges first and the non-tree edges fall into three blocks.
 */
struct SYPrimeComplex {
  ExtendedGraph graph;
  std::map<int, int> edge_of_yedge;
  std::map<int, int> hub_of_sheet;
  struct Spoke {
    int edge = 0;
    int sheet_id = 0;
    int boundary_index = 0;
  };
  std::vector<Spoke> spokes;
  std::map<int, std::vector<int>> loops_of_sheet;
  SpanningForest tree;
  /// Generator k (1-based) is the non-tree edge generator_edges[k-1].
  std::vector<int> generator_edges;
  std::vector<Block> generator_blocks;
  std::map<int, int> letter_of_edge;
  int lambda_count = 0;
  int y_count = 0;
  int q_count = 0;

  int rank() const { return static_cast<int>(generator_edges.size()); }
  /// Letter word of one traversal of an edge; tree edges give the empty word.
  Word traverse(int edge, bool forward) const;
  std::vector<std::string> generator_names() const;
};

SYPrimeComplex build_sy_prime(const MedialComplex& c, const ComponentGraph& lambda);

struct RelationWord {
  int sheet_id = 0;
  Word word;
  bool trivial() const { return word.empty(); }
};

/// Relator per sheet without edge curves: the surface word in the sheet's
/// loop letters ([a1,b1]...[ag,bg] or a1^2...ag^2) followed by the product of
/// spoke * walk * spoke^-1 over its attached boundaries, freely reduced.
std::vector<RelationWord> relation_words(const MedialComplex& c, const SYPrimeComplex& syp);

struct Presentation {
  int rank = 0;
  int lambda_count = 0;
  int y_count = 0;
  int q_count = 0;
  std::vector<std::string> names;
  std::vector<RelationWord> relations;

  std::string to_text() const;
  /// Image in the free group on the λ-block letters (which come first).
  Word lambda_image(const Word& w) const;
  std::vector<Word> words() const;
};

Presentation pi1_presentation(const MedialComplex& c, const ComponentGraph& lambda);
Presentation pi1_presentation(const MedialComplex& c);

struct ContractibilityVerdict {
  bool contractible = false;
  bool gamma_tree = false;
  bool lambda_trees = false;
  bool sheets_simple = false;
  bool euler_relation = false;
  bool generation = false;
  std::vector<std::string> diagnostics;
};

/// All five conditions: Γ a tree, each Λ a tree, every sheet of genus 0
/// with at most one edge curve, the Euler relation per component and the
/// folding generation test per component.
ContractibilityVerdict check_contractible(const std::vector<MedialComplex>& components, const ExtendedGraph& gamma,
                                          const std::vector<InvariantRecord>& records,
                                          const std::vector<Presentation>& presentations);

}  // namespace medial
