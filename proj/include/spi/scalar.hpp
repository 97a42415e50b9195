#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spi/field.hpp"
#include "spi/unipoly.hpp"

namespace spi {

/// Exact multiplicative order of w != 0.
std::uint64_t multiplicative_order(const Felt& w);

/// True iff w^e != 1 for every 1 <= e < bound.
bool order_at_least(const Felt& w, std::uint64_t bound);

/// How the probe points of a block are derived from its base point.
enum class ProbeFamily {
  Powers,     // w^i, i = 1..range
  FoldedOdd,  // (w^(2i-1) + w^-(2i-1)) / 2, i = 1..range
};

/// Probe point number i (1-based) of a block with base w.
Felt probe_point(const Felt& w, int i, ProbeFamily family);

/// Draws `count` base points, each of order >= order_bound, such that the
/// probe points of all blocks over indices 1..probe_index_range are pairwise
/// distinct. Deterministic in rng_seed. Throws SelectionExhausted.
std::vector<Felt> select_base_points(const PrimeField& field, int count,
                                     std::uint64_t order_bound,
                                     int probe_index_range,
                                     std::uint64_t rng_seed,
                                     ProbeFamily family = ProbeFamily::Powers);

/// Bounded discrete logarithm: the delta with |delta| <= D and w^delta = rho,
/// or nullopt. Baby-step giant-step over the window [-D, D]; the answer is
/// re-checked by exponentiation before it is returned.
std::optional<std::int64_t> integer_log(std::int64_t D, const Felt& w,
                                        const Felt& rho);

/// Distinct roots of f in GF(p), ascending by residue. Exhaustive search for
/// p <= 4096, otherwise gcd with x^p - x followed by equal-degree splitting.
std::vector<Felt> distinct_roots(const UniPoly& f);

}  // namespace spi
