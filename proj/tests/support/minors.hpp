#pragma once

// Invariant factors from determinantal divisors: d_k is the gcd of all k x k
// minors and the k-th invariant factor is d_k / d_(k-1). Exponential, so only
// for small matrices.

#include <cstdint>
#include <numeric>
#include <vector>

namespace medial::testoracle {

using Dense = std::vector<std::vector<long long>>;

inline long long det(Dense m) {
  // Cofactor expansion; sizes here are at most 4.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Dense sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      sub.push_back(row);
    }
    long long term = m[0][j] * det(sub);
    out += (j % 2 == 0) ? term : -term;
  }
  return out;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

struct Factors {
  int rank = 0;
  std::vector<long long> diagonal;
};

inline Factors invariant_factors_by_minors(const Dense& a, std::size_t rows, std::size_t cols) {
  Factors f;
  long long prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    long long g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        Dense sub(k, std::vector<long long>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[r[i]][c[j]];
        }
        g = std::gcd(g, det(sub));
      }
    }
    if (g == 0) break;
    f.rank = static_cast<int>(k);
    f.diagonal.push_back(g / prev);
    prev = g;
  }
  return f;
}

}  // namespace medial::testoracle
