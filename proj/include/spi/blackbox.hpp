#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "spi/field.hpp"
#include "spi/scalar.hpp"
#include "spi/sparse_poly.hpp"

namespace spi {

/// Maps a probe point to the wrong value the box returns there.
using ErrorPlan = std::map<Felt, Felt>;

/// Black box for a hidden sparse polynomial with deterministic errors: the
/// plan is keyed by point, so re-probing a point repeats the same value.
/// Not thread-safe (probe appends to the log).
class OracleBox {
 public:
  /// Throws InvalidArgument if a planned value equals the true evaluation.
  OracleBox(SparsePoly hidden, ErrorPlan error_plan);

  Felt probe(const Felt& point);
  Felt true_value(const Felt& point) const { return hidden_(point); }

  const SparsePoly& hidden() const { return hidden_; }
  const ErrorPlan& error_plan() const { return plan_; }
  const std::vector<Felt>& probe_log() const { return log_; }

 private:
  SparsePoly hidden_;
  ErrorPlan plan_;
  std::vector<Felt> log_;
};

/// N = floor(4E/3 + 2) B for the power basis, floor(3E/2 + 2) B for
/// Chebyshev-1.
int evaluation_count(Basis basis, int B, int E);

/// Block structure of the blocked E-error decoders: one base point per
/// block and the probe points of each block in index order.
struct ProbePlan {
  Basis basis;
  std::vector<Felt> bases;
  std::vector<std::vector<Felt>> points;

  std::size_t total() const;
};

/// Deterministic in (basis, field, B, D, E, seed). Power basis: floor(E/3)
/// blocks of 4B followed by a tail of 2B, 3B or 4B probes by E mod 3, base
/// points of order >= 2D+1. Chebyshev-1: floor(E/2) blocks of 3B followed
/// by a tail of 2B (E even) or 3B (E odd), order >= 4D+1, folded points.
/// Throws SelectionExhausted.
ProbePlan plan_probes(Basis basis, const PrimeField& field, int B, int D, int E,
                      std::uint64_t seed);

struct InstanceConfig {
  std::uint64_t p;
  Basis basis;
  int B;
  int D;
  int E;
  /// Number of terms; defaults to B.
  std::optional<int> t;
};

struct Instance {
  PrimeField field;
  Basis basis;
  int B;
  int D;
  int E;
  std::uint64_t seed;
  SparsePoly hidden;
  ErrorPlan errors;
  /// Optional explicit probe list, used by verification instead of the
  /// decoder's plan.
  std::vector<Felt> probes;

  OracleBox oracle() const { return OracleBox(hidden, errors); }
  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Random instance with exactly t terms and exactly E errors placed among the
/// points the standard decoder will probe.
std::pair<Instance, OracleBox> make_instance(const InstanceConfig& config,
                                             std::uint64_t seed);

}  // namespace spi
