#pragma once

#include <vector>

#include "regmeasure/rational.hpp"

namespace regmeasure {

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> data;

  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  BigInt& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Solves A X = B exactly for square nonsingular A by fraction-free
/// (Bareiss) elimination followed by rational back substitution. B and the
/// result are row-major with `rhs_cols` columns. Throws InternalError if A
/// is singular.
std::vector<BigRational> solve_exact(IntMatrix a, std::vector<BigRational> b, std::size_t rhs_cols);

}  // namespace regmeasure
