#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "spi/field.hpp"
#include "spi/sparse_poly.hpp"

namespace spi {

/// Prony / Ben-Or-Tiwari on the window (a_r, ..., a_{r+2B-1}) with
/// a_{r+k} = f(w^{r+k}). Returns a Laurent polynomial of sparsity <= B and
/// term degrees |d| <= D that reproduces every value of the window, or
/// nullopt. r may be negative. Requires w of order >= 2D+1.
std::optional<SparsePoly> try_prony(int r, std::span<const Felt> window, int B,
                                    std::int64_t D, const Felt& w);

/// Chebyshev-1 variant. odd_values[k] = a_{2k+1} = f(gamma_{2k+1}) with
/// gamma_j = (w^j + w^-j) / 2; the first 2B values are used. Runs Prony on
/// the symmetrized sequence a_{|2i-1|}, i = -(2B-1)..2B, and accepts only
/// the paired exponent pattern of a Chebyshev-1 polynomial with sparsity
/// <= B and degree <= D. Requires w of order >= 4D+1.
std::optional<SparsePoly> try_prony_chebyshev(std::span<const Felt> odd_values,
                                              int B, std::int64_t D,
                                              const Felt& w);

/// The symmetrized sequence (a_{|2i-1|}) for i = -(n-1)..n, length 2n.
std::vector<Felt> symmetrize_odd(std::span<const Felt> odd_values, int n);

}  // namespace spi
