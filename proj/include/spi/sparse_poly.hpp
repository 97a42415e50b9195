#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "spi/field.hpp"

namespace spi {

enum class Basis { PowerLaurent, Chebyshev1 };

const char* basis_name(Basis b);

struct Term {
  std::int64_t degree;
  Felt coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in the power/Laurent or Chebyshev-1 basis. Terms are
/// kept sorted by strictly increasing degree with nonzero coefficients, so
/// equality is term-list equality.
class SparsePoly {
 public:
  explicit SparsePoly(Basis basis) : basis_(basis) {}
  /// Sorts, merges equal degrees and drops zero coefficients. Negative
  /// degrees in the Chebyshev-1 basis throw InvalidArgument.
  SparsePoly(Basis basis, std::vector<Term> terms);

  Basis basis() const { return basis_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t sparsity() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Largest |degree| over the terms, 0 for the zero polynomial.
  std::int64_t max_abs_degree() const;

  /// Evaluates in the polynomial's own basis.
  Felt operator()(const Felt& x) const;

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;
  /// Canonical order used for candidate lists.
  friend bool operator<(const SparsePoly& a, const SparsePoly& b);

 private:
  Basis basis_;
  std::vector<Term> terms_;
};

/// T_d(x), d >= 0, by binary powering of the 2x2 three-term recurrence matrix.
Felt chebyshev_t(std::int64_t d, const Felt& x);

Felt eval_power(const SparsePoly& f, const Felt& x);
Felt eval_chebyshev(const SparsePoly& f, const Felt& x);

/// g(y) = f((y + 1/y) / 2) as a Laurent polynomial.
SparsePoly cheb_to_laurent(const SparsePoly& f);

/// Inverse of cheb_to_laurent; nullopt unless coeff(y^d) == coeff(y^-d).
std::optional<SparsePoly> laurent_sym_to_cheb(const SparsePoly& g);

/// Chebyshev-1 expansion of x^d.
SparsePoly power_to_cheb(std::int64_t d, const PrimeField& field);

std::ostream& operator<<(std::ostream& os, const SparsePoly& f);

}  // namespace spi
