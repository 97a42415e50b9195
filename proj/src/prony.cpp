#include "spi/prony.hpp"

#include <map>

#include "spi/generator.hpp"
#include "spi/scalar.hpp"

namespace spi {

namespace {

// Solves A c = b for square nonsingular A; nullopt if singular.
std::optional<std::vector<Felt>> solve_linear(Matrix a, std::vector<Felt> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Felt inv = a[col][col].inv();
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Felt factor = a[row][col] * inv;
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace

std::optional<SparsePoly> try_prony(int r, std::span<const Felt> window, int B,
                                    std::int64_t D, const Felt& w) {
  if (B < 1 || window.size() != static_cast<std::size_t>(2 * B)) {
    throw InvalidArgument("try_prony: window must hold exactly 2B values");
  }
  const UniPoly lambda = berlekamp_massey(window);
  if (lambda.coeff(0).is_zero() || lambda.degree() > B) return std::nullopt;
  const std::vector<Felt> roots = distinct_roots(lambda);
  if (static_cast<int>(roots.size()) < lambda.degree()) return std::nullopt;

  const std::size_t t = roots.size();
  std::vector<std::int64_t> degrees;
  degrees.reserve(t);
  for (const Felt& rho : roots) {
    const auto delta = integer_log(D, w, rho);
    if (!delta) return std::nullopt;
    degrees.push_back(*delta);
  }

  // Transposed Vandermonde system on the first t window values.
  Matrix vandermonde(t);
  std::vector<Felt> rhs(window.begin(), window.begin() + static_cast<std::ptrdiff_t>(t));
  for (std::size_t k = 0; k < t; ++k) {
    for (const Felt& rho : roots) vandermonde[k].push_back(rho.pow(r + static_cast<int>(k)));
  }
  const auto coeffs = solve_linear(std::move(vandermonde), std::move(rhs));
  if (!coeffs) return std::nullopt;

  std::vector<Term> terms;
  for (std::size_t j = 0; j < t; ++j) terms.push_back({degrees[j], (*coeffs)[j]});
  SparsePoly f(Basis::PowerLaurent, std::move(terms));

  // The coefficient solve used t values; the rest of the window must agree.
  for (std::size_t k = 0; k < window.size(); ++k) {
    Felt acc = w.field().zero();
    for (std::size_t j = 0; j < t; ++j) acc += (*coeffs)[j] * roots[j].pow(r + static_cast<int>(k));
    if (acc != window[k]) return std::nullopt;
  }
  return f;
}

std::vector<Felt> symmetrize_odd(std::span<const Felt> odd_values, int n) {
  if (static_cast<int>(odd_values.size()) < n) {
    throw InvalidArgument("symmetrize_odd: not enough odd-indexed values");
  }
  std::vector<Felt> seq;
  seq.reserve(static_cast<std::size_t>(2 * n));
  for (int i = -(n - 1); i <= n; ++i) {
    const int index = 2 * i - 1;
    const int k = ((index < 0 ? -index : index) - 1) / 2;
    seq.push_back(odd_values[static_cast<std::size_t>(k)]);
  }
  return seq;
}

std::optional<SparsePoly> try_prony_chebyshev(std::span<const Felt> odd_values,
                                              int B, std::int64_t D,
                                              const Felt& w) {
  if (B < 1) throw InvalidArgument("try_prony_chebyshev: B must be positive");
  const std::vector<Felt> seq = symmetrize_odd(odd_values, 2 * B);
  // seq[k] = h(w^(k - 2B + 1)) with
  // h(x) = sum_j (c_j/2) (w^-d_j x^(2 d_j) + w^d_j x^(-2 d_j)).
  const auto h = try_prony(-(2 * B - 1), seq, 2 * B, 2 * D, w);
  if (!h) return std::nullopt;

  std::map<std::int64_t, Felt> by_exp;
  for (const Term& t : h->terms()) {
    if (t.degree % 2 != 0) return std::nullopt;
    by_exp.emplace(t.degree, t.coeff);
  }
  const Felt two = w.field()(2);
  std::vector<Term> out;
  for (const auto& [e, c] : by_exp) {
    const std::int64_t d = e / 2;
    if (d < 0) {
      if (!by_exp.contains(-e)) return std::nullopt;
      continue;
    }
    if (d == 0) {
      out.push_back({0, c});
      continue;
    }
    auto mirror = by_exp.find(-e);
    if (mirror == by_exp.end()) return std::nullopt;
    const Felt from_pos = two * c * w.pow(d);
    const Felt from_neg = two * mirror->second * w.pow(-d);
    if (from_pos != from_neg) return std::nullopt;
    out.push_back({d, from_pos});
  }
  SparsePoly f(Basis::Chebyshev1, std::move(out));
  if (static_cast<int>(f.sparsity()) > B || f.max_abs_degree() > D) return std::nullopt;
  return f;
}

}  // namespace spi
