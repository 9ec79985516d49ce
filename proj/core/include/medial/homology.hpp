#pragma once

#include <string>
#include <vector>

#include "medial/extended_graph.hpp"
#include "medial/invariants.hpp"
#include "medial/presentation.hpp"
#include "medial/smith.hpp"

namespace medial {

/// Abelianized relators: one row per generator, one column per sheet
/// without edge curves.
struct AttachingMatrix {
  IntMatrix psi;
  std::vector<Block> row_blocks;
  std::vector<int> sheet_ids;
};

AttachingMatrix attaching_matrix(const Presentation& p);

struct HomologyResult {
  int h2 = 0;
  int h1_free = 0;
  std::vector<long long> torsion;
  bool realizable = true;
  int chi = 0;
  std::vector<std::string> notes;

  /// Same groups; flags and notes are ignored.
  bool same_groups(const HomologyResult& other) const;
  bool trivial() const { return h2 == 0 && h1_free == 0 && torsion.empty(); }
  std::string to_text() const;
};

/// Invariant factor form d1 | d2 | ... with entries equal to 1 dropped.
std::vector<long long> invariant_factors(std::vector<long long> torsion);

/// "0", "Z", "Z^2 ⊕ Z/2".
std::string group_text(int free_rank, const std::vector<long long>& torsion);

/// H2 = ker Ψ and H1 = coker Ψ. Throws std::invalid_argument when the shape
/// of Ψ does not match the record and std::logic_error when rk H2 - rk H1
/// disagrees with the record's χ̃. Realizable is cleared by torsion, by a
/// closed nonorientable sheet, or by a failed rank bound.
HomologyResult component_homology(const AttachingMatrix& psi, const InvariantRecord& r);

/// Direct sum over components plus a free summand of rank β1(Γ) in H1.
HomologyResult global_homology(const std::vector<HomologyResult>& components, const ExtendedGraph& gamma);

}  // namespace medial
