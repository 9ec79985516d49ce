#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "medial/extended_graph.hpp"

namespace medial {

enum class StepKind { Y, Arc };

/// One traversal of a Y-edge or a free edge arc inside a boundary walk.
struct Step {
  StepKind kind = StepKind::Y;
  int id = 0;
  bool forward = true;

  Step reversed() const { return {kind, id, !forward}; }
  bool operator==(const Step&) const = default;
};

using Walk = std::vector<Step>;

Walk reverse_walk(const Walk& w);

/// A boundary circle of a sheet: either a free edge curve or a closed walk
/// attached to the Y-network.
struct Boundary {
  bool edge_curve = false;
  Walk walk;

  static Boundary edge() { return {true, {}}; }
  static Boundary attached(Walk w) { return {false, std::move(w)}; }
  bool operator==(const Boundary&) const = default;
};

struct Sheet {
  int id = 0;
  int genus = 0;
  bool orientable = true;
  std::vector<Boundary> boundaries;

  int edge_count() const;
  int attached_count() const;
  /// 2g for orientable sheets, g otherwise.
  int weighted_genus() const;
  bool operator==(const Sheet&) const = default;
};

/// Edge-curve segment between two fin points, owned by exactly one walk.
struct Arc {
  int id = 0;
  int from = 0;
  int to = 0;
  bool operator==(const Arc&) const = default;
};

/// Declared pairing of two fin points joined by a fin curve.
struct FinDeclaration {
  int id = 0;
  int p = 0;
  int q = 0;
  bool operator==(const FinDeclaration&) const = default;
};

struct Metadata {
  std::string name;
  std::string description;
  /// Set when the encoding was reconstructed from an underdetermined drawing.
  bool reconstruction = false;
  bool operator==(const Metadata&) const = default;
};

/**
 * Combinatorial medial complex.
 *
 * The Y-network is an undirected ExtendedGraph whose edges carry a reference
 * direction (u to v) used by walk steps. Non-artificial vertices are either
 * 6-junctions (Y-valence 4) or fin points (Y-valence 1, one arc end).
 * Every Y-edge is covered exactly three times by boundary walks and every
 * arc exactly once.
 */
struct MedialComplex {
  Metadata metadata;
  ExtendedGraph ynet;
  std::vector<Arc> arcs;
  std::vector<Sheet> sheets;
  std::vector<FinDeclaration> fins;

  bool fin_free() const { return arcs.empty(); }
  const Sheet* find_sheet(int id) const;
  Sheet* find_sheet(int id);
  const Arc* find_arc(int id) const;
  int tail(const Step& s) const;
  int head(const Step& s) const;
  /// Non-artificial vertices of Y-valence 1.
  std::vector<int> fin_points() const;
  /// Non-artificial vertices of Y-valence 4.
  std::vector<int> junctions() const;

  bool operator==(const MedialComplex&) const = default;
};

struct Violation {
  std::string kind;
  std::string location;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_text() const;
};

/// Bipartite graph of a fin-free complex: one S-vertex per sheet, one Y-node
/// per Y-network component, one edge per attached boundary circle.
struct ComponentGraph {
  ExtendedGraph graph;
  /// S-vertex ids are 1..s in sheet order.
  std::vector<int> sheet_ids;
  /// Y-node k has id s+1+k; this is the smallest Y vertex of its component.
  std::vector<int> ynode_roots;
  /// Y-network component of each Y-node.
  std::vector<ExtendedGraph> ynode_graphs;
  struct EdgeInfo {
    int sheet_id = 0;
    int boundary_index = 0;
  };
  /// Keyed by Λ edge id.
  std::map<int, EdgeInfo> edge_info;

  int sheet_vertex(int sheet_id) const;
  bool is_sheet_vertex(int vertex) const { return vertex >= 1 && vertex <= static_cast<int>(sheet_ids.size()); }
};

ValidationReport validate_complex(const MedialComplex& c);

/// Advisory: every junction carries 3 passages per incident edge end and
/// no passage turns around at the junction.
ValidationReport check_six_junction_consistency(const MedialComplex& c);

/// Throws std::invalid_argument when c has arcs or fin records.
ComponentGraph build_component_graph(const MedialComplex& c);

/// Connected pieces of a fin-free complex, ordered by smallest sheet id.
std::vector<MedialComplex> split_components(const MedialComplex& c);

/// Text form used in files and logs: "+3", "-3", "+a2".
std::string step_label(const Step& s);

}  // namespace medial
