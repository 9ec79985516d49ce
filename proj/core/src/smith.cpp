#include "medial/smith.hpp"

#include <stdexcept>
#include <utility>

namespace medial {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

namespace {

struct Reducer {
  IntMatrix& d;
  IntMatrix& u;
  IntMatrix& v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d(i, c), d(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d(r, i), d(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
  /// row i += k * row j
  void add_row(std::size_t i, std::size_t j, const BigInt& k) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) += k * d(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) += k * u(j, c);
  }
  /// col i += k * col j
  void add_col(std::size_t i, std::size_t j, const BigInt& k) {
    for (std::size_t r = 0; r < d.rows(); ++r) d(r, i) += k * d(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) += k * v(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) = -d(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }

  /// Moves the smallest nonzero entry of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    bool found = false;
    std::size_t bi = t, bj = t;
    BigInt best;
    for (std::size_t i = t; i < d.rows(); ++i) {
      for (std::size_t j = t; j < d.cols(); ++j) {
        if (d(i, j) == 0) continue;
        BigInt m = abs(d(i, j));
        if (!found || m < best) {
          found = true;
          best = m;
          bi = i;
          bj = j;
        }
      }
    }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  /// Clears row t and column t outside the pivot; false if a remainder was left.
  bool eliminate(std::size_t t) {
    bool clean = true;
    for (std::size_t i = t + 1; i < d.rows(); ++i) {
      if (d(i, t) == 0) continue;
      BigInt q = d(i, t) / d(t, t);
      add_row(i, t, -q);
      if (d(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < d.cols(); ++j) {
      if (d(t, j) == 0) continue;
      BigInt q = d(t, j) / d(t, t);
      add_col(j, t, -q);
      if (d(t, j) != 0) clean = false;
    }
    return clean;
  }

  /// Finds an entry of the trailing block not divisible by the pivot and
  /// adds its row to the pivot row.
  bool fix_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < d.rows(); ++i) {
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(i, j) % d(t, t) != 0) {
          add_row(t, i, 1);
          return true;
        }
      }
    }
    return false;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm out;
  out.D = a;
  out.U = IntMatrix::identity(a.rows());
  out.V = IntMatrix::identity(a.cols());
  Reducer r{out.D, out.U, out.V};
  std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < n; ++t) {
    if (!r.place_pivot(t)) break;
    while (true) {
      if (!r.eliminate(t)) {
        r.place_pivot(t);
        continue;
      }
      if (r.fix_divisibility(t)) continue;
      break;
    }
    if (out.D(t, t) < 0) r.negate_row(t);
    out.diagonal.push_back(out.D(t, t));
    ++out.rank;
  }
  return out;
}

}  // namespace medial
