#pragma once

#include <utility>
#include <vector>

namespace spi {

/// Fraction-free (Bareiss) determinant over an integral domain. `zero` and
/// `one` are the ring constants; `exact_div(a, b)` must return a / b when b
/// divides a. The matrix is taken by value and destroyed.
template <typename T, typename IsZero, typename ExactDiv>
T bareiss_determinant(std::vector<std::vector<T>> m, const T& one,
                      IsZero is_zero, ExactDiv exact_div) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t pivot = k + 1;
      while (pivot < n && is_zero(m[pivot][k])) ++pivot;
      if (pivot == n) return one - one;
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  T det = std::move(m[n - 1][n - 1]);
  return negate ? -det : det;
}

}  // namespace spi
