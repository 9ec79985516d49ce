#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

namespace medial {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix; zero rows or columns are allowed.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> a_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// U * A * V = D with U, V unimodular and D diagonal; the nonzero diagonal
/// entries are positive and each divides the next.
struct SmithForm {
  std::vector<BigInt> diagonal;
  int rank = 0;
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;
};

SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace medial
