#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "medial/extended_graph.hpp"
#include "medial/homology.hpp"
#include "medial/medial_model.hpp"

namespace medial {

/// Dense int64 matrix used by the oracle. Kept apart from IntMatrix so the
/// two homology routes share no arithmetic.
struct I64Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> a;

  I64Matrix() = default;
  I64Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  std::int64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/**
 * Cellular chain complex of a medial complex.
 *
 * 0-cells are the Y-network vertices and one hub per sheet. 1-cells are
 * Y-edges, arcs, one spoke from the hub to the start of each attached
 * boundary walk, and hub loops (g̃ when the sheet has no edge curve,
 * g̃ + e - 1 otherwise). Each sheet without edge curves contributes a 2-cell
 * attached along its surface word followed by spoke * walk * spoke^-1 for
 * every attached boundary.
 */
struct CWChainComplex {
  int n0 = 0;
  int n1 = 0;
  int n2 = 0;
  std::vector<std::string> cells0;
  std::vector<std::string> cells1;
  std::vector<std::string> cells2;
  /// n0 x n1
  I64Matrix d1;
  /// n1 x n2
  I64Matrix d2;
  /// Connected components of the 1-skeleton.
  int components = 0;
};

/// Arcs are ordinary 1-cells, so complexes with fins are accepted.
CWChainComplex build_chain_complex(const MedialComplex& c);

/// Disjoint union of the component complexes plus one 1-cell per Γ edge
/// joining the first 0-cells of the two components it connects.
CWChainComplex assemble_chain_complex(const std::vector<MedialComplex>& components, const ExtendedGraph& gamma);

struct OracleResult {
  HomologyResult homology;
  int h0_reduced = 0;
  /// n0 - n1 + n2 - components.
  int chi_cells = 0;
};

/// Throws std::logic_error when d1 * d2 != 0 and std::overflow_error when an
/// intermediate value leaves int64.
OracleResult oracle_homology(const CWChainComplex& cc);

/// Rank and invariant factors of an int64 matrix.
struct I64Diagonal {
  int rank = 0;
  std::vector<std::int64_t> factors;
};

I64Diagonal diagonalize(I64Matrix m);

}  // namespace medial
