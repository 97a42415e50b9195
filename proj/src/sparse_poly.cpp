#include "spi/sparse_poly.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace spi {

const char* basis_name(Basis b) {
  return b == Basis::PowerLaurent ? "power" : "cheb1";
}

SparsePoly::SparsePoly(Basis basis, std::vector<Term> terms) : basis_(basis) {
  std::map<std::int64_t, Felt> merged;
  for (const Term& t : terms) {
    if (basis == Basis::Chebyshev1 && t.degree < 0) {
      throw InvalidArgument("Chebyshev-1 term degrees must be non-negative");
    }
    auto [it, inserted] = merged.emplace(t.degree, t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  for (const auto& [d, c] : merged) {
    if (!c.is_zero()) terms_.push_back({d, c});
  }
}

std::int64_t SparsePoly::max_abs_degree() const {
  std::int64_t m = 0;
  for (const Term& t : terms_) m = std::max(m, t.degree < 0 ? -t.degree : t.degree);
  return m;
}

Felt SparsePoly::operator()(const Felt& x) const {
  return basis_ == Basis::PowerLaurent ? eval_power(*this, x)
                                       : eval_chebyshev(*this, x);
}

bool operator<(const SparsePoly& a, const SparsePoly& b) {
  if (a.basis_ != b.basis_) return a.basis_ < b.basis_;
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const Term& x, const Term& y) {
        if (x.degree != y.degree) return x.degree < y.degree;
        return x.coeff < y.coeff;
      });
}

Felt chebyshev_t(std::int64_t d, const Felt& x) {
  if (d < 0) throw InvalidArgument("chebyshev_t: negative degree");
  const PrimeField F = x.field();
  using Mat = std::array<Felt, 4>;  // row-major 2x2
  auto mul = [](const Mat& a, const Mat& b) {
    return Mat{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
               a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
  };
  Mat step{F.zero(), F.one(), -F.one(), F(2) * x};
  Mat acc{F.one(), F.zero(), F.zero(), F.one()};
  for (auto k = static_cast<std::uint64_t>(d); k != 0; k >>= 1) {
    if (k & 1) acc = mul(acc, step);
    step = mul(step, step);
  }
  // First row of M^d applied to (T_0, T_1) = (1, x).
  return acc[0] + acc[1] * x;
}

Felt eval_power(const SparsePoly& f, const Felt& x) {
  Felt acc = x.field().zero();
  for (const Term& t : f.terms()) {
    if (t.degree < 0 && x.is_zero()) throw PoleAtZero();
    acc += t.coeff * x.pow(t.degree);
  }
  return acc;
}

Felt eval_chebyshev(const SparsePoly& f, const Felt& x) {
  Felt acc = x.field().zero();
  for (const Term& t : f.terms()) acc += t.coeff * chebyshev_t(t.degree, x);
  return acc;
}

SparsePoly cheb_to_laurent(const SparsePoly& f) {
  if (f.basis() != Basis::Chebyshev1) {
    throw InvalidArgument("cheb_to_laurent expects a Chebyshev-1 polynomial");
  }
  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    if (t.degree == 0) {
      out.push_back(t);
      continue;
    }
    const Felt half = t.coeff / t.coeff.field()(2);
    out.push_back({t.degree, half});
    out.push_back({-t.degree, half});
  }
  return SparsePoly(Basis::PowerLaurent, std::move(out));
}

std::optional<SparsePoly> laurent_sym_to_cheb(const SparsePoly& g) {
  if (g.basis() != Basis::PowerLaurent) {
    throw InvalidArgument("laurent_sym_to_cheb expects a Laurent polynomial");
  }
  std::map<std::int64_t, Felt> by_degree;
  for (const Term& t : g.terms()) by_degree.emplace(t.degree, t.coeff);
  std::vector<Term> out;
  for (const auto& [d, c] : by_degree) {
    if (d < 0) {
      auto mirror = by_degree.find(-d);
      if (mirror == by_degree.end() || mirror->second != c) return std::nullopt;
      continue;
    }
    if (d == 0) {
      out.push_back({0, c});
      continue;
    }
    auto mirror = by_degree.find(-d);
    if (mirror == by_degree.end() || mirror->second != c) return std::nullopt;
    out.push_back({d, c + c});
  }
  return SparsePoly(Basis::Chebyshev1, std::move(out));
}

SparsePoly power_to_cheb(std::int64_t d, const PrimeField& field) {
  if (d < 0) throw InvalidArgument("power_to_cheb: negative degree");
  if (static_cast<std::uint64_t>(d) >= field.modulus()) {
    throw InvalidArgument("power_to_cheb: degree must be below the modulus");
  }
  // x^d = 2^(1-d) * sum_{j = d, d-2, ...} binom(d, (d-j)/2) * T_j, where the
  // j = 0 term carries an extra factor 1/2.
  const Felt two = field(2);
  const Felt scale = two.pow(1 - d);
  std::vector<Term> out;
  Felt binom = field.one();  // binom(d, k) for k = (d - j) / 2
  for (std::int64_t k = 0; 2 * k <= d; ++k) {
    if (k > 0) binom = binom * field(d - k + 1) / field(k);
    const std::int64_t j = d - 2 * k;
    Felt c = scale * binom;
    if (j == 0) c /= two;
    out.push_back({j, c});
  }
  return SparsePoly(Basis::Chebyshev1, std::move(out));
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& f) {
  if (f.is_zero()) return os << "0";
  const char* sym = f.basis() == Basis::PowerLaurent ? "x^" : "T";
  bool first = true;
  for (const Term& t : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << t.coeff << "*" << sym << t.degree;
  }
  return os;
}

}  // namespace spi
