#pragma once

#include <span>
#include <utility>
#include <vector>

#include "spi/field.hpp"

namespace spi {

/// Dense univariate polynomial over GF(p), constant term first. Trailing
/// zero coefficients are always stripped, so the zero polynomial has no
/// coefficients and degree -1.
class UniPoly {
 public:
  explicit UniPoly(PrimeField field) : field_(field) {}
  UniPoly(PrimeField field, std::vector<Felt> coeffs);

  static UniPoly constant(const Felt& c);
  static UniPoly monomial(const Felt& c, int degree);
  /// x - r
  static UniPoly linear_root(const Felt& r);

  const PrimeField& field() const { return field_; }
  const std::vector<Felt>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^k; zero beyond the degree.
  Felt coeff(int k) const;
  Felt leading() const;

  Felt operator()(const Felt& x) const;

  UniPoly monic() const;
  UniPoly operator-() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const Felt& c);
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  /// Quotient and remainder; throws ZeroInverse on division by zero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }
  UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }

 private:
  void trim();

  PrimeField field_;
  std::vector<Felt> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);

/// base^e mod m for e >= 0.
UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& m);

/// Lagrange interpolation through (xs[k], ys[k]); xs must be distinct.
UniPoly interpolate(std::span<const Felt> xs, std::span<const Felt> ys);

std::ostream& operator<<(std::ostream& os, const UniPoly& f);

}  // namespace spi
