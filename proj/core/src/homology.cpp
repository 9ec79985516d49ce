#include "medial/homology.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace medial {

AttachingMatrix attaching_matrix(const Presentation& p) {
  AttachingMatrix m;
  m.psi = IntMatrix(static_cast<std::size_t>(p.rank), p.relations.size());
  for (std::size_t k = 0; k < p.relations.size(); ++k) {
    auto sums = exponent_sums(p.relations[k].word, p.rank);
    for (std::size_t i = 0; i < sums.size(); ++i) m.psi(i, k) = sums[i];
    m.sheet_ids.push_back(p.relations[k].sheet_id);
  }
  for (int i = 0; i < p.lambda_count; ++i) m.row_blocks.push_back(Block::Lambda);
  for (int i = 0; i < p.y_count; ++i) m.row_blocks.push_back(Block::Y);
  for (int i = 0; i < p.q_count; ++i) m.row_blocks.push_back(Block::Q);
  return m;
}

std::vector<long long> invariant_factors(std::vector<long long> torsion) {
  auto& f = torsion;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      long long g = std::gcd(f[i], f[j]);
      long long l = f[i] / g * f[j];
      f[i] = g;
      f[j] = l;
    }
  }
  f.erase(std::remove(f.begin(), f.end(), 1LL), f.end());
  return f;
}

bool HomologyResult::same_groups(const HomologyResult& other) const {
  return h2 == other.h2 && h1_free == other.h1_free &&
         invariant_factors(torsion) == invariant_factors(other.torsion);
}

std::string group_text(int free_rank, const std::vector<long long>& torsion) {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (long long t : torsion) parts.push_back("Z/" + std::to_string(t));
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " ⊕ " : "") + parts[i];
  return out;
}

std::string HomologyResult::to_text() const {
  return "H2 = " + group_text(h2, {}) + ", H1 = " + group_text(h1_free, torsion);
}

HomologyResult component_homology(const AttachingMatrix& m, const InvariantRecord& r) {
  if (static_cast<int>(m.psi.rows()) != r.Q || static_cast<int>(m.psi.cols()) != r.s0) {
    throw std::invalid_argument("attaching matrix is " + std::to_string(m.psi.rows()) + "x" +
                                std::to_string(m.psi.cols()) + ", expected " + std::to_string(r.Q) + "x" +
                                std::to_string(r.s0));
  }
  SmithForm snf = smith_normal_form(m.psi);
  HomologyResult h;
  h.h2 = r.s0 - snf.rank;
  h.h1_free = r.Q - snf.rank;
  for (const auto& d : snf.diagonal) {
    if (d > 1) {
      if (d > std::numeric_limits<long long>::max()) throw std::overflow_error("torsion coefficient too large");
      h.torsion.push_back(d.convert_to<long long>());
    }
  }
  h.chi = h.h2 - h.h1_free;
  if (h.chi != r.chi) {
    throw std::logic_error("rk H2 - rk H1 = " + std::to_string(h.chi) + " but the invariants give " +
                           std::to_string(r.chi));
  }
  if (!h.torsion.empty()) {
    h.realizable = false;
    h.notes.push_back("H1 has torsion");
  }
  if (r.s0n > 0) {
    h.realizable = false;
    h.notes.push_back("closed nonorientable sheet");
  }
  if (h.h2 > r.s0o) {
    h.realizable = false;
    h.notes.push_back("rk H2 exceeds the number of closed orientable sheets");
  }
  if (h.h1_free > r.Q - r.s0n || h.h1_free < r.q) {
    h.realizable = false;
    h.notes.push_back("rk H1 outside [q, Q - s0n]");
  }
  return h;
}

HomologyResult global_homology(const std::vector<HomologyResult>& components, const ExtendedGraph& gamma) {
  HomologyResult h;
  int beta1 = betti1(gamma);
  for (const auto& c : components) {
    h.h2 += c.h2;
    h.h1_free += c.h1_free;
    h.torsion.insert(h.torsion.end(), c.torsion.begin(), c.torsion.end());
    h.realizable = h.realizable && c.realizable;
    h.chi += c.chi;
    h.notes.insert(h.notes.end(), c.notes.begin(), c.notes.end());
  }
  h.torsion = invariant_factors(h.torsion);
  h.h1_free += beta1;
  h.chi -= beta1;
  if (h.chi != h.h2 - h.h1_free) throw std::logic_error("global homology is inconsistent with its χ̃");
  return h;
}

}  // namespace medial
