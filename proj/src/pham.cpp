#include "spi/pham.hpp"

#include <algorithm>

#include "spi/bareiss.hpp"
#include "spi/scalar.hpp"

namespace spi {

namespace {

BiPoly swap_variables(const BiPoly& f) {
  std::map<BiPoly::Exponents, Felt> swapped;
  for (const auto& [e, c] : f.coeffs()) swapped.emplace(BiPoly::Exponents{e.second, e.first}, c);
  return BiPoly(f.field(), swapped);
}

bool has_pham_shape(const BiPoly& d, int var, int B) {
  const Felt lead = var == 0 ? d.coeff(B + 1, 0) : d.coeff(0, B + 1);
  if (lead.is_zero() || d.total_degree() != B + 1) return false;
  for (const auto& [e, c] : d.coeffs()) {
    if (e.first + e.second == B + 1 && (var == 0 ? e.first : e.second) != B + 1) return false;
  }
  return true;
}

}  // namespace

UniPoly sylvester_resultant(const BiPoly& f, const BiPoly& g, Axis eliminate) {
  if (f.is_zero() || g.is_zero()) {
    throw InvalidArgument("sylvester_resultant: zero polynomial");
  }
  if (eliminate == Axis::Alpha1) {
    return sylvester_resultant(swap_variables(f), swap_variables(g), Axis::Alpha2);
  }
  const PrimeField F = f.field();
  const std::vector<UniPoly> fc = f.coefficients_in_alpha2();
  const std::vector<UniPoly> gc = g.coefficients_in_alpha2();
  if (gc.back().degree() != 0) {
    throw InvalidArgument(
        "sylvester_resultant: leading coefficient of g must be a nonzero constant");
  }
  const std::size_t m = fc.size() - 1;
  const std::size_t n = gc.size() - 1;
  const std::size_t size = m + n;

  std::vector<std::vector<UniPoly>> syl(size, std::vector<UniPoly>(size, UniPoly(F)));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t k = 0; k <= m; ++k) syl[row][row + k] = fc[m - k];
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t k = 0; k <= n; ++k) syl[n + row][row + k] = gc[n - k];
  }
  UniPoly res = bareiss_determinant(
      std::move(syl), UniPoly::constant(F.one()),
      [](const UniPoly& p) { return p.is_zero(); },
      [](const UniPoly& a, const UniPoly& b) {
        auto [q, r] = a.divmod(b);
        if (!r.is_zero()) throw std::logic_error("Bareiss division not exact");
        return q;
      });
  if (res.is_zero()) {
    throw DegenerateSystem("resultant vanishes identically; system is not zero-dimensional");
  }
  return res;
}

std::vector<std::pair<Felt, Felt>> solve_pham(const BiPoly& d1, const BiPoly& d2, int B) {
  if (B < 0 || !has_pham_shape(d1, 0, B) || !has_pham_shape(d2, 1, B)) {
    throw InvalidArgument("solve_pham: input is not a Pham system of degree B + 1");
  }
  const UniPoly res = sylvester_resultant(d1, d2, Axis::Alpha2);
  std::vector<std::pair<Felt, Felt>> out;
  for (const Felt& x1 : distinct_roots(res)) {
    const UniPoly fiber = d2.at_alpha1(x1);
    for (const Felt& x2 : distinct_roots(fiber)) {
      if (d1(x1, x2).is_zero() && d2(x1, x2).is_zero()) out.emplace_back(x1, x2);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace spi
