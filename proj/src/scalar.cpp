#include "spi/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <unordered_map>

#include "spi/rng.hpp"

namespace spi {

namespace {

std::uint64_t order_with_factors(const Felt& w,
                                 const std::vector<std::uint64_t>& factors) {
  std::uint64_t ord = w.modulus() - 1;
  for (std::uint64_t q : factors) {
    while (ord % q == 0 && w.pow(static_cast<std::int64_t>(ord / q)).is_one()) {
      ord /= q;
    }
  }
  return ord;
}

std::uint64_t hash_poly(const UniPoly& f) {
  std::uint64_t h = mix_seed(f.field().modulus());
  for (const Felt& c : f.coeffs()) h = mix_seed(h ^ c.residue());
  return h;
}

// Roots of a monic squarefree g that splits into distinct linear factors.
void split_linear(const UniPoly& g, Rng& rng, std::vector<Felt>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.coeff(0) / g.coeff(1));
    return;
  }
  const PrimeField F = g.field();
  const std::uint64_t half = (F.modulus() - 1) / 2;
  const UniPoly one = UniPoly::constant(F.one());
  for (;;) {
    const Felt a = F.from_residue(rng.below(F.modulus()));
    const UniPoly shifted(F, {a, F.one()});
    const UniPoly h = gcd(g, powmod(shifted, half, g) - one);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_linear(h, rng, out);
      split_linear((g / h).monic(), rng, out);
      return;
    }
  }
}

}  // namespace

std::uint64_t multiplicative_order(const Felt& w) {
  if (w.is_zero()) throw InvalidBasePoint("zero has no multiplicative order");
  return order_with_factors(w, w.field().group_order_factors());
}

bool order_at_least(const Felt& w, std::uint64_t bound) {
  if (w.is_zero()) throw InvalidBasePoint("base point must be nonzero");
  if (bound < 1) throw InvalidArgument("order bound must be at least 1");
  return multiplicative_order(w) >= bound;
}

Felt probe_point(const Felt& w, int i, ProbeFamily family) {
  if (family == ProbeFamily::Powers) return w.pow(i);
  const std::int64_t k = 2 * static_cast<std::int64_t>(i) - 1;
  return (w.pow(k) + w.pow(-k)) / w.field()(2);
}

std::vector<Felt> select_base_points(const PrimeField& field, int count,
                                     std::uint64_t order_bound,
                                     int probe_index_range,
                                     std::uint64_t rng_seed,
                                     ProbeFamily family) {
  if (count < 1 || probe_index_range < 1) {
    throw InvalidArgument("select_base_points: count and range must be >= 1");
  }
  if (order_bound > field.modulus() - 1) {
    throw SelectionExhausted("no element of GF(" +
                             std::to_string(field.modulus()) +
                             ") has order >= " + std::to_string(order_bound));
  }
  const auto factors = field.group_order_factors();
  Rng rng(mix_seed(rng_seed));
  constexpr int kRestarts = 64;
  const int draws_per_restart = 256 + 64 * count;

  for (int restart = 0; restart < kRestarts; ++restart) {
    std::vector<Felt> chosen;
    std::set<Felt> used_points;
    for (int draw = 0;
         draw < draws_per_restart && static_cast<int>(chosen.size()) < count;
         ++draw) {
      const Felt w = field.from_residue(1 + rng.below(field.modulus() - 1));
      if (order_with_factors(w, factors) < order_bound) continue;
      std::vector<Felt> pts;
      pts.reserve(static_cast<std::size_t>(probe_index_range));
      bool ok = true;
      for (int i = 1; i <= probe_index_range && ok; ++i) {
        const Felt x = probe_point(w, i, family);
        ok = !used_points.contains(x) &&
             std::find(pts.begin(), pts.end(), x) == pts.end();
        pts.push_back(x);
      }
      if (!ok) continue;
      used_points.insert(pts.begin(), pts.end());
      chosen.push_back(w);
    }
    if (static_cast<int>(chosen.size()) == count) return chosen;
  }
  throw SelectionExhausted("could not find " + std::to_string(count) +
                           " base points with distinct probe points in GF(" +
                           std::to_string(field.modulus()) + ")");
}

std::optional<std::int64_t> integer_log(std::int64_t D, const Felt& w,
                                        const Felt& rho) {
  if (D <= 0) throw InvalidArgument("integer_log: D must be positive");
  if (w.is_zero()) throw InvalidBasePoint("integer_log: base must be nonzero");
  if (rho.is_zero()) throw InvalidArgument("integer_log: rho must be nonzero");

  // Find the least k in [0, 2D] with w^k = rho * w^D; then delta = k - D.
  const std::int64_t width = 2 * D + 1;
  const auto m = static_cast<std::int64_t>(
      std::ceil(std::sqrt(static_cast<double>(width))));
  std::unordered_map<std::uint64_t, std::int64_t> baby;
  baby.reserve(static_cast<std::size_t>(m));
  Felt acc = w.field().one();
  for (std::int64_t j = 0; j < m; ++j) {
    baby.emplace(acc.residue(), j);
    acc *= w;
  }
  const Felt giant = w.pow(-m);
  Felt target = rho * w.pow(D);
  for (std::int64_t i = 0; i * m < width; ++i) {
    if (auto it = baby.find(target.residue()); it != baby.end()) {
      const std::int64_t k = i * m + it->second;
      if (k >= width) return std::nullopt;
      const std::int64_t delta = k - D;
      if (w.pow(delta) != rho) return std::nullopt;
      return delta;
    }
    target *= giant;
  }
  return std::nullopt;
}

std::vector<Felt> distinct_roots(const UniPoly& f) {
  if (f.is_zero()) throw InvalidArgument("distinct_roots: zero polynomial");
  const PrimeField F = f.field();
  std::vector<Felt> roots;
  if (f.degree() == 0) return roots;

  if (F.modulus() <= 4096) {
    for (std::uint64_t r = 0; r < F.modulus(); ++r) {
      const Felt x = F.from_residue(r);
      if (f(x).is_zero()) roots.push_back(x);
    }
    return roots;
  }

  const UniPoly g = f.monic();
  const UniPoly x(F, {F.zero(), F.one()});
  const UniPoly split = gcd(g, powmod(x, F.modulus(), g) - x);
  Rng rng(hash_poly(g));
  split_linear(split, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace spi
