#include "spi/unipoly.hpp"

#include <algorithm>

namespace spi {

UniPoly::UniPoly(PrimeField field, std::vector<Felt> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const Felt& c : coeffs_) {
    if (c.modulus() != field_.modulus()) throw FieldMismatch();
  }
  trim();
}

UniPoly UniPoly::constant(const Felt& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::monomial(const Felt& c, int degree) {
  std::vector<Felt> v(static_cast<std::size_t>(degree) + 1, c.field().zero());
  v.back() = c;
  return UniPoly(c.field(), std::move(v));
}

UniPoly UniPoly::linear_root(const Felt& r) {
  return UniPoly(r.field(), {-r, r.field().one()});
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Felt UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return field_.zero();
  return coeffs_[static_cast<std::size_t>(k)];
}

Felt UniPoly::leading() const {
  return is_zero() ? field_.zero() : coeffs_.back();
}

Felt UniPoly::operator()(const Felt& x) const {
  Felt acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inv();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (Felt& c : r.coeffs_) c = -c;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch();
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  std::vector<Felt> v(n, a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return UniPoly(a.field_, std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch();
  if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
  std::vector<Felt> v(a.coeffs_.size() + b.coeffs_.size() - 1,
                      a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return UniPoly(a.field_, std::move(v));
}

UniPoly operator*(const UniPoly& a, const Felt& c) {
  std::vector<Felt> v = a.coeffs_;
  for (Felt& x : v) x *= c;
  return UniPoly(a.field_, std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (!(field_ == d.field_)) throw FieldMismatch();
  if (d.is_zero()) throw ZeroInverse();
  if (degree() < d.degree()) return {UniPoly(field_), *this};
  std::vector<Felt> rem = coeffs_;
  const int dd = d.degree();
  std::vector<Felt> quo(static_cast<std::size_t>(degree() - dd + 1),
                        field_.zero());
  const Felt lead_inv = d.leading().inv();
  for (int k = degree(); k >= dd; --k) {
    const Felt q = rem[static_cast<std::size_t>(k)] * lead_inv;
    quo[static_cast<std::size_t>(k - dd)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -=
          q * d.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  rem.erase(rem.begin() + dd, rem.end());
  return {UniPoly(field_, std::move(quo)), UniPoly(field_, std::move(rem))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& m) {
  UniPoly acc = UniPoly::constant(m.field().one()) % m;
  UniPoly b = base % m;
  while (e != 0) {
    if (e & 1) acc = (acc * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return acc;
}

UniPoly interpolate(std::span<const Felt> xs, std::span<const Felt> ys) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw InvalidArgument("interpolate: need matching, nonempty node lists");
  }
  const PrimeField F = xs.front().field();
  UniPoly result(F);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    UniPoly basis = UniPoly::constant(F.one());
    Felt denom = F.one();
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == k) continue;
      basis = basis * UniPoly::linear_root(xs[j]);
      denom *= xs[k] - xs[j];
    }
    result = result + basis * (ys[k] / denom);
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (int k = f.degree(); k >= 0; --k) {
    const Felt c = f.coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c;
    if (k > 0) os << "*z^" << k;
  }
  return os;
}

}  // namespace spi
