#include "medial/cw_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace medial {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in oracle");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in oracle");
  return r;
}

std::int64_t abs64(std::int64_t x) {
  if (x == INT64_MIN) throw std::overflow_error("int64 overflow in oracle");
  return x < 0 ? -x : x;
}

/// g = gcd(a, b) = x*a + y*b.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - checked_mul(q, x1);
    x0 = x1;
    x1 = t;
    t = y0 - checked_mul(q, y1);
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

/// Builds cells for one complex with a given 0-cell and 1-cell offset.
struct Builder {
  std::vector<std::string> cells0, cells1, cells2;
  std::vector<std::pair<int, int>> ends;
  std::vector<std::map<int, std::int64_t>> cols2;

  int add0(std::string name) {
    cells0.push_back(std::move(name));
    return static_cast<int>(cells0.size()) - 1;
  }
  int add1(std::string name, int from, int to) {
    cells1.push_back(std::move(name));
    ends.emplace_back(from, to);
    return static_cast<int>(cells1.size()) - 1;
  }

  void add_complex(const MedialComplex& c, const std::string& prefix) {
    std::map<int, int> vcell;
    for (int v : c.ynet.vertices()) vcell[v] = add0(prefix + "y" + std::to_string(v));
    std::map<int, int> ycell, acell;
    for (const auto& e : c.ynet.edges()) ycell[e.id] = add1(prefix + "e" + std::to_string(e.id), vcell.at(e.u), vcell.at(e.v));
    for (const auto& a : c.arcs) acell[a.id] = add1(prefix + "a" + std::to_string(a.id), vcell.at(a.from), vcell.at(a.to));

    for (const auto& s : c.sheets) {
      const std::string sname = prefix + "S" + std::to_string(s.id);
      int hub = add0(sname + ".hub");
      std::vector<std::pair<int, Walk>> spokes;
      for (std::size_t b = 0; b < s.boundaries.size(); ++b) {
        const auto& bd = s.boundaries[b];
        if (bd.edge_curve) continue;
        int target = vcell.at(c.tail(bd.walk.front()));
        int sp = add1(sname + ".spoke" + std::to_string(b), hub, target);
        spokes.emplace_back(sp, bd.walk);
      }
      const int e = s.edge_count();
      const int gt = s.weighted_genus();
      const int nloops = e == 0 ? gt : gt + e - 1;
      std::vector<int> loops;
      for (int k = 0; k < nloops; ++k) loops.push_back(add1(sname + ".loop" + std::to_string(k), hub, hub));
      if (e != 0) continue;

      cells2.push_back(sname);
      std::map<int, std::int64_t> col;
      auto bump = [&col](int cell, std::int64_t d) { col[cell] = checked_add(col[cell], d); };
      if (!s.orientable) {
        for (int l : loops) bump(l, 2);
      }
      for (const auto& [sp, walk] : spokes) {
        bump(sp, 1);
        for (const auto& st : walk) {
          int cell = st.kind == StepKind::Y ? ycell.at(st.id) : acell.at(st.id);
          bump(cell, st.forward ? 1 : -1);
        }
        bump(sp, -1);
      }
      cols2.push_back(std::move(col));
    }
  }

  CWChainComplex finish() const {
    CWChainComplex cc;
    cc.n0 = static_cast<int>(cells0.size());
    cc.n1 = static_cast<int>(cells1.size());
    cc.n2 = static_cast<int>(cells2.size());
    cc.cells0 = cells0;
    cc.cells1 = cells1;
    cc.cells2 = cells2;
    cc.d1 = I64Matrix(cells0.size(), cells1.size());
    for (std::size_t j = 0; j < ends.size(); ++j) {
      auto [u, v] = ends[j];
      if (u == v) continue;
      cc.d1.at(static_cast<std::size_t>(u), j) -= 1;
      cc.d1.at(static_cast<std::size_t>(v), j) += 1;
    }
    cc.d2 = I64Matrix(cells1.size(), cells2.size());
    for (std::size_t k = 0; k < cols2.size(); ++k) {
      for (const auto& [cell, d] : cols2[k]) cc.d2.at(static_cast<std::size_t>(cell), k) = d;
    }
    std::vector<int> parent(cells0.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int comps = cc.n0;
    for (auto [u, v] : ends) {
      int a = find(u), b = find(v);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
    cc.components = comps;
    return cc;
  }
};

}  // namespace

CWChainComplex build_chain_complex(const MedialComplex& c) {
  Builder b;
  b.add_complex(c, "");
  return b.finish();
}

CWChainComplex assemble_chain_complex(const std::vector<MedialComplex>& components, const ExtendedGraph& gamma) {
  Builder b;
  std::vector<int> base;
  for (std::size_t k = 0; k < components.size(); ++k) {
    base.push_back(static_cast<int>(b.cells0.size()));
    b.add_complex(components[k], "M" + std::to_string(k + 1) + ".");
  }
  for (const auto& e : gamma.edges()) {
    int u = e.u - 1, v = e.v - 1;
    if (u < 0 || v < 0 || u >= static_cast<int>(components.size()) || v >= static_cast<int>(components.size())) {
      throw std::invalid_argument("gamma edge " + std::to_string(e.id) + " names a missing component");
    }
    b.add1("gamma" + std::to_string(e.id), base[static_cast<std::size_t>(u)], base[static_cast<std::size_t>(v)]);
  }
  return b.finish();
}

I64Diagonal diagonalize(I64Matrix m) {
  I64Diagonal out;
  const std::size_t n = std::min(m.rows, m.cols);
  std::size_t t = 0;
  for (; t < n; ++t) {
    std::size_t pi = m.rows, pj = m.cols;
    for (std::size_t i = t; i < m.rows && pi == m.rows; ++i) {
      for (std::size_t j = t; j < m.cols; ++j) {
        if (m.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == m.rows) break;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(t, j), m.at(pi, j));
    for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, t), m.at(i, pj));

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < m.rows; ++i) {
        std::int64_t b = m.at(i, t);
        if (b == 0) continue;
        std::int64_t a = m.at(t, t), x = 1, y = 0;
        std::int64_t g = b % a == 0 ? a : ext_gcd(a, b, x, y);
        std::int64_t pa = a / g, pb = b / g;
        for (std::size_t j = t; j < m.cols; ++j) {
          std::int64_t rt = m.at(t, j), ri = m.at(i, j);
          m.at(t, j) = checked_add(checked_mul(x, rt), checked_mul(y, ri));
          m.at(i, j) = checked_add(checked_mul(-pb, rt), checked_mul(pa, ri));
        }
      }
      for (std::size_t j = t + 1; j < m.cols; ++j) {
        std::int64_t b = m.at(t, j);
        if (b == 0) continue;
        std::int64_t a = m.at(t, t), x = 1, y = 0;
        std::int64_t g = b % a == 0 ? a : ext_gcd(a, b, x, y);
        std::int64_t pa = a / g, pb = b / g;
        for (std::size_t i = t; i < m.rows; ++i) {
          std::int64_t ct = m.at(i, t), cj = m.at(i, j);
          m.at(i, t) = checked_add(checked_mul(x, ct), checked_mul(y, cj));
          m.at(i, j) = checked_add(checked_mul(-pb, ct), checked_mul(pa, cj));
        }
      }
      for (std::size_t i = t + 1; i < m.rows && !dirty; ++i) dirty = m.at(i, t) != 0;
    }
    out.factors.push_back(abs64(m.at(t, t)));
  }
  out.rank = static_cast<int>(t);
  // Diagonal to invariant factors: (a, b) -> (gcd, lcm) until each divides the next.
  auto& f = out.factors;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      std::int64_t g = std::gcd(f[i], f[j]);
      std::int64_t l = checked_mul(f[i] / g, f[j]);
      f[i] = g;
      f[j] = l;
    }
  }
  return out;
}

OracleResult oracle_homology(const CWChainComplex& cc) {
  for (std::size_t i = 0; i < cc.d1.rows; ++i) {
    for (std::size_t k = 0; k < cc.d2.cols; ++k) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < cc.d1.cols; ++j) s = checked_add(s, checked_mul(cc.d1.at(i, j), cc.d2.at(j, k)));
      if (s != 0) throw std::logic_error("chain condition fails at 0-cell " + cc.cells0[i] + ", 2-cell " + cc.cells2[k]);
    }
  }
  I64Diagonal r1 = diagonalize(cc.d1);
  I64Diagonal r2 = diagonalize(cc.d2);
  OracleResult out;
  out.h0_reduced = cc.n0 - r1.rank - 1;
  if (cc.n0 == 0) out.h0_reduced = 0;
  out.homology.h2 = cc.n2 - r2.rank;
  out.homology.h1_free = cc.n1 - r1.rank - r2.rank;
  for (std::int64_t d : r2.factors) {
    if (d > 1) out.homology.torsion.push_back(d);
  }
  out.homology.chi = out.homology.h2 - out.homology.h1_free;
  out.chi_cells = cc.n0 - cc.n1 + cc.n2 - cc.components;
  if (cc.n0 > 0 && out.h0_reduced != cc.components - 1) throw std::logic_error("rank of d1 disagrees with the 1-skeleton");
  if (out.chi_cells != out.homology.chi) throw std::logic_error("cell count disagrees with the Betti numbers");
  return out;
}

}  // namespace medial
