#include "regmeasure/linalg.hpp"

#include <utility>

#include "regmeasure/errors.hpp"

namespace regmeasure {

std::vector<BigRational> solve_exact(IntMatrix a, std::vector<BigRational> b, std::size_t rhs_cols) {
  const std::size_t n = a.rows;
  const std::size_t r = rhs_cols;
  if (a.cols != n || b.size() != n * r) throw InternalError("solve_exact: shape mismatch");
  auto rhs = [&](std::size_t i, std::size_t j) -> BigRational& { return b[i * r + j]; };

  BigInt previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a.at(pivot, k) == 0) ++pivot;
    if (pivot == n) throw InternalError("solve_exact: singular system");
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      for (std::size_t j = 0; j < r; ++j) std::swap(rhs(k, j), rhs(pivot, j));
    }
    const BigInt& p = a.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const BigInt factor = a.at(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = p * a.at(i, j) - factor * a.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        a.at(i, j) = std::move(v);
      }
      for (std::size_t j = 0; j < r; ++j) {
        BigRational v = BigRational(p) * rhs(i, j) - BigRational(factor) * rhs(k, j);
        v /= BigRational(previous);
        v.canonicalize();
        rhs(i, j) = std::move(v);
      }
      a.at(i, k) = 0;
    }
    previous = p;
  }

  std::vector<BigRational> x(n * r);
  for (std::size_t col = 0; col < r; ++col) {
    for (std::size_t i = n; i-- > 0;) {
      BigRational acc = rhs(i, col);
      for (std::size_t j = i + 1; j < n; ++j) acc -= BigRational(a.at(i, j)) * x[j * r + col];
      acc /= BigRational(a.at(i, i));
      acc.canonicalize();
      x[i * r + col] = std::move(acc);
    }
  }
  return x;
}

}  // namespace regmeasure
