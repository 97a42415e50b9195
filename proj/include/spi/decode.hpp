#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "spi/blackbox.hpp"
#include "spi/field.hpp"
#include "spi/sparse_poly.hpp"

namespace spi {

struct EvalEntry {
  int index;
  Felt point;
  Felt value;
};

/// Probed values of one block. Power basis: point = base^index. Chebyshev-1:
/// point = gamma_{2 index - 1}.
struct EvalBlock {
  Basis basis;
  Felt base;
  std::vector<EvalEntry> entries;

  std::vector<Felt> values() const;
  /// Contiguous sub-block of `count` entries starting at entry `offset`.
  EvalBlock slice(std::size_t offset, std::size_t count) const;
};

/// Builds a block with indices first..first+count-1 from a value list.
EvalBlock make_block(Basis basis, const Felt& base, int first,
                     const std::vector<Felt>& values);

struct Position {
  int block;
  int index;
  friend auto operator<=>(const Position&, const Position&) = default;
};

struct Candidate {
  SparsePoly poly;
  std::vector<Position> mismatches;
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

enum class Stage {
  PronyTail,      // plain Prony on a clean 2B tail
  Power1Err,      // 3B power window, <= 1 error
  Power2Err,      // 4B power window, <= 2 errors
  ChebPronyTail,  // Chebyshev Prony on a 2B tail
  Cheb1Err,       // 3B Chebyshev window, <= 1 error
  PowerUnion,     // blocked power decoder after global verification
  ChebUnion,      // blocked Chebyshev decoder after global verification
};

const char* stage_name(Stage s);

/// List size bookkeeping: `raw` counts accepted hypotheses before
/// deduplication, `size` the final list, `bound` the proven maximum.
struct ListStat {
  Stage stage;
  int block;
  std::size_t raw;
  std::size_t size;
  std::size_t bound;
};

struct DecodeResult {
  std::vector<Candidate> candidates;
  int probes_used = 0;
  std::vector<ListStat> stats;
};

struct DecodeOptions {
  /// Worker threads for the two-error hypothesis loop; <= 1 runs inline.
  int threads = 1;
};

/// B^2 + B + 2
std::size_t bound_power_1err(int B);
/// B^4 + 2B^3 + 3B^2 + 2B + 6
std::size_t bound_power_2err(int B);
/// 2B^2 + 2B + 1
std::size_t bound_cheb_1err(int B);
std::size_t bound_power_union(int B, int E);
std::size_t bound_cheb_union(int B, int E);

/// Positions (block number in `blocks`, entry index) where f differs from
/// the recorded value, sorted.
std::vector<Position> verify_candidate(const SparsePoly& f,
                                       const std::vector<EvalBlock>& blocks);

/// Decoders return nullopt for FAIL (empty list).
std::optional<DecodeResult> decode_power_1err(const EvalBlock& block, int B,
                                              std::int64_t D, const Felt& w);
std::optional<DecodeResult> decode_power_2err(const EvalBlock& block, int B,
                                              std::int64_t D, const Felt& w,
                                              const DecodeOptions& options = {});
std::optional<DecodeResult> decode_cheb_1err(const EvalBlock& block, int B,
                                             std::int64_t D, const Felt& w);

/// Probes the box at the plan from plan_probes(seed) and decodes each block.
std::optional<DecodeResult> decode_power_E(OracleBox& box, int B, std::int64_t D,
                                           int E, const PrimeField& field,
                                           std::uint64_t seed,
                                           const DecodeOptions& options = {});
std::optional<DecodeResult> decode_cheb_E(OracleBox& box, int B, std::int64_t D,
                                          int E, const PrimeField& field,
                                          std::uint64_t seed,
                                          const DecodeOptions& options = {});

/// Dispatches on the instance basis.
std::optional<DecodeResult> decode_instance(const Instance& instance, OracleBox& box,
                                            const DecodeOptions& options = {});

}  // namespace spi
