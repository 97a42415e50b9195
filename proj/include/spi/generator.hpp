#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "spi/field.hpp"
#include "spi/unipoly.hpp"

namespace spi {

using Matrix = std::vector<std::vector<Felt>>;

/// Bivariate polynomial in (alpha1, alpha2); monomial alpha1^i alpha2^j is
/// keyed by (i, j). Zero coefficients are never stored.
class BiPoly {
 public:
  using Exponents = std::pair<int, int>;

  explicit BiPoly(PrimeField field) : field_(field) {}
  BiPoly(PrimeField field, const std::map<Exponents, Felt>& coeffs);

  static BiPoly constant(const Felt& c);
  /// c * alpha1^i * alpha2^j
  static BiPoly monomial(const Felt& c, int i, int j);

  const PrimeField& field() const { return field_; }
  const std::map<Exponents, Felt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Felt coeff(int i, int j) const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Degree in alpha1 (var = 0) or alpha2 (var = 1); -1 for zero.
  int degree_in(int var) const;

  Felt operator()(const Felt& a1, const Felt& a2) const;
  /// The univariate polynomial in alpha2 obtained by fixing alpha1 = x.
  UniPoly at_alpha1(const Felt& x) const;
  /// Coefficients of alpha2^0, alpha2^1, ... as polynomials in alpha1.
  std::vector<UniPoly> coefficients_in_alpha2() const;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  void add_term(Exponents e, const Felt& c);

  PrimeField field_;
  std::map<Exponents, Felt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const BiPoly& f);

/// Matrix entry affine in the two symbols: c0 + c1 * alpha1 + c2 * alpha2.
struct SymEntry {
  Felt c0;
  Felt c1;
  Felt c2;

  Felt at(const Felt& a1, const Felt& a2) const { return c0 + c1 * a1 + c2 * a2; }
};
using SymMatrix = std::vector<std::vector<SymEntry>>;

/// Determinant over GF(p) by fraction-free elimination.
Felt determinant(Matrix m);

/// det of a matrix whose entries may involve alpha1 only, computed by
/// evaluation at n+1 nodes 0, 1, ..., n and interpolation.
UniPoly det_univariate(const SymMatrix& m, const PrimeField& field);

/// det of a matrix with entries affine in (alpha1, alpha2), by evaluation on
/// the (n+1) x (n+1) grid {0..n}^2 and tensor interpolation.
BiPoly det_bivariate(const SymMatrix& m, const PrimeField& field);

/// Monic minimal linear generator Lambda(z) of a nonempty sequence; the zero
/// sequence gives Lambda = 1.
UniPoly berlekamp_massey(std::span<const Felt> seq);

// The Hankel helpers below take `values` with values[k] = a_{k+1}. The fold
// helpers take `odd_values` with odd_values[k] = a_{2k+1}.

/// H_r with entry (i, j) = a_{r+i+j}, 0 <= i, j <= B.
Matrix hankel_matrix(std::span<const Felt> values, int r, int B);

/// det H_r with a_{sym_index} replaced by alpha; requires sym_index = r + B.
UniPoly hankel_det_sym(std::span<const Felt> values, int r, int sym_index,
                       int B);

/// G_r with entry (i, j) = a_{|r+2(i+j)|} + a_{|r+2(i-j)|}, r odd in [1, 2B-1].
Matrix fold_matrix(std::span<const Felt> odd_values, int r, int B);

/// det G_r with a_{sym_odd_index} replaced by alpha; the index must be r or
/// r + 2B.
UniPoly fold_det_sym(std::span<const Felt> odd_values, int r,
                     int sym_odd_index, int B);

/// (det H_{l1-B}, det H_{l2-B}) with a_{l1} -> alpha1 and a_{l2} -> alpha2,
/// for B+1 <= l1 <= 2B and 2B+1 <= l2 <= 3B.
std::pair<BiPoly, BiPoly> pham_system_sym(std::span<const Felt> values,
                                          int l1, int l2, int B);

// Symbolic matrices behind the determinants above; exposed for testing
// against independent determinant routines.
SymMatrix hankel_sym_matrix(std::span<const Felt> values, int r, int B,
                            const std::map<int, int>& symbol_at);
SymMatrix fold_sym_matrix(std::span<const Felt> odd_values, int r, int B,
                          int sym_odd_index);

}  // namespace spi
