#include "spi/blackbox.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "spi/rng.hpp"

namespace spi {

OracleBox::OracleBox(SparsePoly hidden, ErrorPlan error_plan)
    : hidden_(std::move(hidden)), plan_(std::move(error_plan)) {
  for (const auto& [point, value] : plan_) {
    if (hidden_(point) == value) {
      throw InvalidArgument("error plan entry at " + std::to_string(point.residue()) +
                            " equals the true value");
    }
  }
}

Felt OracleBox::probe(const Felt& point) {
  log_.push_back(point);
  if (auto it = plan_.find(point); it != plan_.end()) return it->second;
  return hidden_(point);
}

int evaluation_count(Basis basis, int B, int E) {
  if (B < 1 || E < 0) throw InvalidArgument("evaluation_count: need B >= 1, E >= 0");
  // floor(4E/3 + 2) = floor((4E + 6) / 3), floor(3E/2 + 2) = floor((3E + 4) / 2)
  return basis == Basis::PowerLaurent ? (4 * E + 6) / 3 * B : (3 * E + 4) / 2 * B;
}

std::size_t ProbePlan::total() const {
  std::size_t n = 0;
  for (const auto& block : points) n += block.size();
  return n;
}

ProbePlan plan_probes(Basis basis, const PrimeField& field, int B, int D, int E,
                      std::uint64_t seed) {
  if (B < 1 || D < 1 || E < 0) {
    throw InvalidArgument("plan_probes: need B >= 1, D >= 1, E >= 0");
  }
  std::vector<int> lengths;
  std::uint64_t order_bound;
  ProbeFamily family;
  if (basis == Basis::PowerLaurent) {
    const int tau = E / 3;
    lengths.assign(static_cast<std::size_t>(tau), 4 * B);
    lengths.push_back(E % 3 == 0 ? 2 * B : E % 3 == 1 ? 3 * B : 4 * B);
    order_bound = 2 * static_cast<std::uint64_t>(D) + 1;
    family = ProbeFamily::Powers;
  } else {
    const int tau = E / 2;
    lengths.assign(static_cast<std::size_t>(tau), 3 * B);
    lengths.push_back(E % 2 == 0 ? 2 * B : 3 * B);
    order_bound = 4 * static_cast<std::uint64_t>(D) + 1;
    family = ProbeFamily::FoldedOdd;
  }
  const int range = *std::max_element(lengths.begin(), lengths.end());
  ProbePlan plan{basis,
                 select_base_points(field, static_cast<int>(lengths.size()),
                                    order_bound, range, seed, family),
                 {}};
  for (std::size_t s = 0; s < lengths.size(); ++s) {
    std::vector<Felt> pts;
    for (int i = 1; i <= lengths[s]; ++i) pts.push_back(probe_point(plan.bases[s], i, family));
    plan.points.push_back(std::move(pts));
  }
  return plan;
}

std::pair<Instance, OracleBox> make_instance(const InstanceConfig& config,
                                             std::uint64_t seed) {
  const PrimeField field(config.p);
  const int t = config.t.value_or(config.B);
  if (config.B < 1 || config.D < 1 || config.E < 0 || t < 0 || t > config.B) {
    throw InvalidArgument("make_instance: need B >= 1, D >= 1, E >= 0, 0 <= t <= B");
  }
  const std::int64_t lo = config.basis == Basis::PowerLaurent ? -config.D : 0;
  const std::int64_t hi = config.D;
  if (hi - lo + 1 < t) throw InvalidArgument("make_instance: degree range too small for t terms");
  if (config.basis == Basis::Chebyshev1 && static_cast<std::uint64_t>(config.D) >= config.p) {
    throw InvalidArgument("make_instance: Chebyshev degree bound must be below p");
  }

  // Independent streams: the probe plan depends on the seed alone, so the
  // decoder can rebuild it from the instance header.
  Rng poly_rng(mix_seed(seed ^ 0x706f6c79ULL));
  Rng error_rng(mix_seed(seed ^ 0x6572726fULL));

  std::set<std::int64_t> degrees;
  while (static_cast<int>(degrees.size()) < t) degrees.insert(poly_rng.between(lo, hi));
  std::vector<Term> terms;
  for (std::int64_t d : degrees) {
    terms.push_back({d, field.from_residue(1 + poly_rng.below(config.p - 1))});
  }
  SparsePoly hidden(config.basis, std::move(terms));

  const ProbePlan plan = plan_probes(config.basis, field, config.B, config.D, config.E, seed);
  std::vector<Felt> all_points;
  for (const auto& block : plan.points) all_points.insert(all_points.end(), block.begin(), block.end());

  // Partial Fisher-Yates for E distinct positions.
  std::vector<std::size_t> order(all_points.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  ErrorPlan errors;
  for (int e = 0; e < config.E; ++e) {
    const std::size_t k = static_cast<std::size_t>(e);
    const std::size_t pick = k + error_rng.below(order.size() - k);
    std::swap(order[k], order[pick]);
    const Felt point = all_points[order[k]];
    const Felt offset = field.from_residue(1 + error_rng.below(config.p - 1));
    errors.emplace(point, hidden(point) + offset);
  }

  Instance inst{field, config.basis, config.B, config.D, config.E, seed, hidden, errors, {}};
  OracleBox box = inst.oracle();
  return {std::move(inst), std::move(box)};
}

}  // namespace spi
