#include "spi/generator.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "spi/bareiss.hpp"

namespace spi {

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(PrimeField field, const std::map<Exponents, Felt>& coeffs)
    : field_(field) {
  for (const auto& [e, c] : coeffs) add_term(e, c);
}

BiPoly BiPoly::constant(const Felt& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Felt& c, int i, int j) {
  BiPoly r(c.field());
  r.add_term({i, j}, c);
  return r;
}

void BiPoly::add_term(Exponents e, const Felt& c) {
  if (c.modulus() != field_.modulus()) throw FieldMismatch();
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

Felt BiPoly::coeff(int i, int j) const {
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? field_.zero() : it->second;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : coeffs_) d = std::max(d, e.first + e.second);
  return d;
}

int BiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : coeffs_) d = std::max(d, var == 0 ? e.first : e.second);
  return d;
}

Felt BiPoly::operator()(const Felt& a1, const Felt& a2) const {
  Felt acc = field_.zero();
  for (const auto& [e, c] : coeffs_) acc += c * a1.pow(e.first) * a2.pow(e.second);
  return acc;
}

UniPoly BiPoly::at_alpha1(const Felt& x) const {
  std::vector<Felt> v(static_cast<std::size_t>(std::max(degree_in(1), 0)) + 1,
                      field_.zero());
  for (const auto& [e, c] : coeffs_) {
    v[static_cast<std::size_t>(e.second)] += c * x.pow(e.first);
  }
  return UniPoly(field_, std::move(v));
}

std::vector<UniPoly> BiPoly::coefficients_in_alpha2() const {
  const int d2 = degree_in(1);
  const int d1 = std::max(degree_in(0), 0);
  std::vector<std::vector<Felt>> dense(
      static_cast<std::size_t>(d2 + 1),
      std::vector<Felt>(static_cast<std::size_t>(d1) + 1, field_.zero()));
  for (const auto& [e, c] : coeffs_) {
    dense[static_cast<std::size_t>(e.second)][static_cast<std::size_t>(e.first)] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(dense.size());
  for (auto& row : dense) out.emplace_back(field_, std::move(row));
  return out;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [e, c] : r.coeffs_) c = -c;
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch();
  BiPoly r = a;
  for (const auto& [e, c] : b.coeffs_) r.add_term(e, c);
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch();
  BiPoly r(a.field_);
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    }
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const BiPoly& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [e, c] : f.coeffs()) {
    if (!first) os << " + ";
    first = false;
    os << c << "*a1^" << e.first << "*a2^" << e.second;
  }
  return os;
}

// ---------------------------------------------------------- determinants

Felt determinant(Matrix m) {
  if (m.empty()) throw InvalidArgument("determinant of an empty matrix");
  const PrimeField F = m.front().front().field();
  return bareiss_determinant(
      std::move(m), F.one(), [](const Felt& x) { return x.is_zero(); },
      [](const Felt& a, const Felt& b) { return a / b; });
}

namespace {

std::vector<Felt> interpolation_nodes(const PrimeField& F, std::size_t n) {
  if (F.modulus() < n + 1) {
    throw InvalidArgument("field too small for " + std::to_string(n + 1) +
                          " interpolation nodes");
  }
  std::vector<Felt> xs;
  xs.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) xs.push_back(F.from_residue(k));
  return xs;
}

Matrix evaluate(const SymMatrix& m, const Felt& a1, const Felt& a2) {
  Matrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    std::vector<Felt> r;
    r.reserve(row.size());
    for (const SymEntry& e : row) r.push_back(e.at(a1, a2));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

UniPoly det_univariate(const SymMatrix& m, const PrimeField& field) {
  const std::vector<Felt> xs = interpolation_nodes(field, m.size());
  std::vector<Felt> ys;
  ys.reserve(xs.size());
  for (const Felt& x : xs) ys.push_back(determinant(evaluate(m, x, field.zero())));
  return interpolate(xs, ys);
}

BiPoly det_bivariate(const SymMatrix& m, const PrimeField& field) {
  const std::vector<Felt> xs = interpolation_nodes(field, m.size());
  // Interpolate in alpha2 for each alpha1 node, then each alpha2-coefficient
  // in alpha1.
  std::vector<UniPoly> slices;
  slices.reserve(xs.size());
  for (const Felt& a1 : xs) {
    std::vector<Felt> ys;
    ys.reserve(xs.size());
    for (const Felt& a2 : xs) ys.push_back(determinant(evaluate(m, a1, a2)));
    slices.push_back(interpolate(xs, ys));
  }
  std::map<BiPoly::Exponents, Felt> coeffs;
  for (int j = 0; j < static_cast<int>(xs.size()); ++j) {
    std::vector<Felt> ys;
    ys.reserve(xs.size());
    for (const UniPoly& s : slices) ys.push_back(s.coeff(j));
    const UniPoly cj = interpolate(xs, ys);
    for (int i = 0; i <= cj.degree(); ++i) coeffs.emplace(BiPoly::Exponents{i, j}, cj.coeff(i));
  }
  return BiPoly(field, coeffs);
}

// ------------------------------------------------------- Berlekamp-Massey

UniPoly berlekamp_massey(std::span<const Felt> seq) {
  if (seq.empty()) throw InvalidArgument("berlekamp_massey: empty sequence");
  const PrimeField F = seq.front().field();
  std::vector<Felt> conn{F.one()};  // C(x) = 1 + c_1 x + ... + c_L x^L
  std::vector<Felt> prev{F.one()};
  std::size_t L = 0;
  std::size_t shift = 1;
  Felt prev_disc = F.one();

  for (std::size_t n = 0; n < seq.size(); ++n) {
    Felt d = seq[n];
    for (std::size_t i = 1; i <= L && i < conn.size(); ++i) d += conn[i] * seq[n - i];
    if (d.is_zero()) {
      ++shift;
      continue;
    }
    const Felt factor = d / prev_disc;
    std::vector<Felt> next = conn;
    if (next.size() < prev.size() + shift) next.resize(prev.size() + shift, F.zero());
    for (std::size_t i = 0; i < prev.size(); ++i) next[i + shift] -= factor * prev[i];
    if (2 * L <= n) {
      prev = std::move(conn);
      L = n + 1 - L;
      prev_disc = d;
      shift = 1;
    } else {
      ++shift;
    }
    conn = std::move(next);
  }
  // Lambda(z) = z^L C(1/z).
  std::vector<Felt> lambda(L + 1, F.zero());
  for (std::size_t i = 0; i <= L && i < conn.size(); ++i) lambda[L - i] = conn[i];
  return UniPoly(F, std::move(lambda));
}

// ------------------------------------------------------ structured matrices

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

Felt odd_value(std::span<const Felt> odd_values, int index) {
  const int k = (std::abs(index) - 1) / 2;
  return odd_values[static_cast<std::size_t>(k)];
}

void check_fold_args(std::span<const Felt> odd_values, int r, int B) {
  require(B >= 1, "fold matrix: B must be positive");
  require(r >= 1 && r <= 2 * B - 1 && r % 2 == 1,
          "fold matrix: r must be odd in [1, 2B-1]");
  require(static_cast<int>(odd_values.size()) >= (r + 4 * B + 1) / 2,
          "fold matrix: not enough odd-indexed values");
}

}  // namespace

Matrix hankel_matrix(std::span<const Felt> values, int r, int B) {
  require(B >= 1, "hankel_matrix: B must be positive");
  require(r >= 1 && r + 2 * B <= static_cast<int>(values.size()),
          "hankel_matrix: window out of range");
  Matrix h(static_cast<std::size_t>(B + 1));
  for (int i = 0; i <= B; ++i) {
    for (int j = 0; j <= B; ++j) {
      h[static_cast<std::size_t>(i)].push_back(values[static_cast<std::size_t>(r + i + j - 1)]);
    }
  }
  return h;
}

SymMatrix hankel_sym_matrix(std::span<const Felt> values, int r, int B,
                            const std::map<int, int>& symbol_at) {
  const Matrix h = hankel_matrix(values, r, B);
  const PrimeField F = values.front().field();
  SymMatrix m(h.size());
  for (int i = 0; i <= B; ++i) {
    for (int j = 0; j <= B; ++j) {
      SymEntry e{h[i][j], F.zero(), F.zero()};
      if (auto it = symbol_at.find(r + i + j); it != symbol_at.end()) {
        e.c0 = F.zero();
        (it->second == 1 ? e.c1 : e.c2) = F.one();
      }
      m[static_cast<std::size_t>(i)].push_back(e);
    }
  }
  return m;
}

UniPoly hankel_det_sym(std::span<const Felt> values, int r, int sym_index,
                       int B) {
  require(sym_index == r + B, "hankel_det_sym: symbol must sit at index r + B");
  const PrimeField F = values.front().field();
  UniPoly det = det_univariate(hankel_sym_matrix(values, r, B, {{sym_index, 1}}), F);
  if (det.degree() != B + 1 || !(det.leading().is_one() || (-det.leading()).is_one())) {
    throw std::logic_error("hankel_det_sym: anti-diagonal structure violated");
  }
  return det;
}

Matrix fold_matrix(std::span<const Felt> odd_values, int r, int B) {
  check_fold_args(odd_values, r, B);
  Matrix g(static_cast<std::size_t>(B + 1));
  for (int i = 0; i <= B; ++i) {
    for (int j = 0; j <= B; ++j) {
      g[static_cast<std::size_t>(i)].push_back(odd_value(odd_values, r + 2 * (i + j)) +
                                               odd_value(odd_values, r + 2 * (i - j)));
    }
  }
  return g;
}

SymMatrix fold_sym_matrix(std::span<const Felt> odd_values, int r, int B,
                          int sym_odd_index) {
  check_fold_args(odd_values, r, B);
  const PrimeField F = odd_values.front().field();
  auto part = [&](int index) {
    if (std::abs(index) == sym_odd_index) return SymEntry{F.zero(), F.one(), F.zero()};
    return SymEntry{odd_value(odd_values, index), F.zero(), F.zero()};
  };
  SymMatrix m(static_cast<std::size_t>(B + 1));
  for (int i = 0; i <= B; ++i) {
    for (int j = 0; j <= B; ++j) {
      const SymEntry a = part(r + 2 * (i + j));
      const SymEntry b = part(r + 2 * (i - j));
      m[static_cast<std::size_t>(i)].push_back({a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2});
    }
  }
  return m;
}

UniPoly fold_det_sym(std::span<const Felt> odd_values, int r, int sym_odd_index,
                     int B) {
  require(sym_odd_index == r || sym_odd_index == r + 2 * B,
          "fold_det_sym: symbol must replace a_r or a_{r+2B}");
  const PrimeField F = odd_values.front().field();
  UniPoly det = det_univariate(fold_sym_matrix(odd_values, r, B, sym_odd_index), F);
  if (det.degree() != B + 1) {
    throw std::logic_error("fold_det_sym: determinant degree is not B + 1");
  }
  return det;
}

std::pair<BiPoly, BiPoly> pham_system_sym(std::span<const Felt> values, int l1,
                                          int l2, int B) {
  require(B >= 1, "pham_system_sym: B must be positive");
  require(l1 >= B + 1 && l1 <= 2 * B, "pham_system_sym: l1 must lie in [B+1, 2B]");
  require(l2 >= 2 * B + 1 && l2 <= 3 * B, "pham_system_sym: l2 must lie in [2B+1, 3B]");
  require(static_cast<int>(values.size()) >= 4 * B,
          "pham_system_sym: need 4B values");
  const PrimeField F = values.front().field();
  const std::map<int, int> symbols{{l1, 1}, {l2, 2}};
  return {det_bivariate(hankel_sym_matrix(values, l1 - B, B, symbols), F),
          det_bivariate(hankel_sym_matrix(values, l2 - B, B, symbols), F)};
}

}  // namespace spi
