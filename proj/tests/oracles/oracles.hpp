#pragma once

// Slow, independent reference routines for tests. Nothing here calls the
// determinant, root finding or resultant code under test.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spi/generator.hpp"
#include "spi/sparse_poly.hpp"

namespace spi::oracle {

using BiMatrix = std::vector<std::vector<BiPoly>>;

// Laplace expansion along the first row.
BiPoly cofactor_det(const BiMatrix& m);
Felt cofactor_det(const Matrix& m);

BiMatrix lift(const SymMatrix& m);

// Throws if the polynomial involves alpha2.
UniPoly alpha1_only(const BiPoly& f);

// Symbolic matrices built straight from the definitions.
BiMatrix hankel_symbolic(std::span<const Felt> values, int r, int B,
                         int sym1, int sym2 = -1);
BiMatrix fold_symbolic(std::span<const Felt> odd_values, int r, int B, int sym);

// All x in GF(p) with f(x) = 0.
std::vector<Felt> brute_roots(const UniPoly& f);

// All (x, y) in GF(p)^2 with f = g = 0.
std::vector<std::pair<Felt, Felt>> brute_common_zeros(const BiPoly& f, const BiPoly& g);

// T_d by the three-term recurrence.
Felt chebyshev_naive(std::int64_t d, const Felt& x);

// Smallest L such that the sequence satisfies some recurrence of order L,
// by checking Hankel-style linear systems directly.
int linear_complexity_naive(std::span<const Felt> seq);

// Least |delta| <= D with w^delta = rho, by linear scan.
std::optional<std::int64_t> log_naive(std::int64_t D, const Felt& w, const Felt& rho);

}  // namespace spi::oracle
