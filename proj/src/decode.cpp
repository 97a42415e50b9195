#include "spi/decode.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>

#include "spi/generator.hpp"
#include "spi/pham.hpp"
#include "spi/prony.hpp"
#include "spi/scalar.hpp"

namespace spi {

namespace {

void dedup(std::vector<SparsePoly>& polys) {
  std::sort(polys.begin(), polys.end());
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
}

void check_window(const EvalBlock& block, std::size_t length, const char* who) {
  if (block.entries.size() != length) {
    throw InvalidArgument(std::string(who) + ": wrong window length");
  }
  for (std::size_t k = 1; k < block.entries.size(); ++k) {
    if (block.entries[k].index != block.entries[k - 1].index + 1) {
      throw InvalidArgument(std::string(who) + ": indices must be consecutive");
    }
  }
}

// Candidates with at most `max_errors` mismatches inside the block, sorted
// and distinct.
DecodeResult finish(const std::vector<SparsePoly>& accepted, const EvalBlock& block,
                    Stage stage, std::size_t bound) {
  std::vector<SparsePoly> list = accepted;
  dedup(list);
  DecodeResult out;
  for (auto& f : list) out.candidates.push_back({f, verify_candidate(f, {block})});
  out.probes_used = static_cast<int>(block.entries.size());
  out.stats.push_back({stage, 0, accepted.size(), list.size(), bound});
  return out;
}

std::size_t mismatch_count(const SparsePoly& f, const EvalBlock& block) {
  std::size_t n = 0;
  for (const auto& e : block.entries) n += f(e.point) != e.value;
  return n;
}

}  // namespace

std::vector<Felt> EvalBlock::values() const {
  std::vector<Felt> v;
  v.reserve(entries.size());
  for (const auto& e : entries) v.push_back(e.value);
  return v;
}

EvalBlock EvalBlock::slice(std::size_t offset, std::size_t count) const {
  if (offset + count > entries.size()) throw InvalidArgument("EvalBlock::slice out of range");
  EvalBlock sub{basis, base, {}};
  sub.entries.assign(entries.begin() + static_cast<std::ptrdiff_t>(offset),
                     entries.begin() + static_cast<std::ptrdiff_t>(offset + count));
  return sub;
}

EvalBlock make_block(Basis basis, const Felt& base, int first,
                     const std::vector<Felt>& values) {
  const ProbeFamily family =
      basis == Basis::PowerLaurent ? ProbeFamily::Powers : ProbeFamily::FoldedOdd;
  EvalBlock block{basis, base, {}};
  for (std::size_t k = 0; k < values.size(); ++k) {
    const int i = first + static_cast<int>(k);
    block.entries.push_back({i, probe_point(base, i, family), values[k]});
  }
  return block;
}

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::PronyTail: return "prony-tail";
    case Stage::Power1Err: return "power-1err";
    case Stage::Power2Err: return "power-2err";
    case Stage::ChebPronyTail: return "cheb-prony-tail";
    case Stage::Cheb1Err: return "cheb-1err";
    case Stage::PowerUnion: return "power-union";
    case Stage::ChebUnion: return "cheb-union";
  }
  return "?";
}

std::size_t bound_power_1err(int B) {
  const std::size_t b = static_cast<std::size_t>(B);
  return b * b + b + 2;
}

std::size_t bound_power_2err(int B) {
  const std::size_t b = static_cast<std::size_t>(B);
  return b * b * b * b + 2 * b * b * b + 3 * b * b + 2 * b + 6;
}

std::size_t bound_cheb_1err(int B) {
  const std::size_t b = static_cast<std::size_t>(B);
  return 2 * b * b + 2 * b + 1;
}

std::size_t bound_power_union(int B, int E) {
  const std::size_t tau = static_cast<std::size_t>(E / 3);
  switch (E % 3) {
    case 0: return tau * bound_power_2err(B) + 1;
    case 1: return tau * bound_power_2err(B) + bound_power_1err(B);
    default: return (tau + 1) * bound_power_2err(B);
  }
}

std::size_t bound_cheb_union(int B, int E) {
  const std::size_t tau = static_cast<std::size_t>(E / 2);
  return E % 2 == 0 ? tau * bound_cheb_1err(B) + 1 : (tau + 1) * bound_cheb_1err(B);
}

std::vector<Position> verify_candidate(const SparsePoly& f,
                                       const std::vector<EvalBlock>& blocks) {
  std::vector<Position> out;
  for (std::size_t s = 0; s < blocks.size(); ++s) {
    for (const auto& e : blocks[s].entries) {
      if (f(e.point) != e.value) out.push_back({static_cast<int>(s), e.index});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<DecodeResult> decode_power_1err(const EvalBlock& block, int B,
                                              std::int64_t D, const Felt& w) {
  if (B < 1) throw InvalidArgument("decode_power_1err: B must be positive");
  check_window(block, static_cast<std::size_t>(3 * B), "decode_power_1err");
  const std::vector<Felt> a = block.values();
  const int r = block.entries.front().index;
  const std::span<const Felt> all(a);

  std::vector<SparsePoly> accepted;
  auto accept = [&](const std::optional<SparsePoly>& f) {
    if (f && mismatch_count(*f, block) <= 1) accepted.push_back(*f);
  };

  // error in the last or the first B positions
  accept(try_prony(r, all.subspan(0, 2 * B), B, D, w));
  accept(try_prony(r + B, all.subspan(B, 2 * B), B, D, w));

  // error at a middle position l: a_l is a root of det H_{l-B}(alpha)
  for (int l = B + 1; l <= 2 * B; ++l) {
    const UniPoly delta = hankel_det_sym(all, l - B, l, B);
    for (const Felt& xi : distinct_roots(delta)) {
      std::vector<Felt> patched = a;
      patched[static_cast<std::size_t>(l - 1)] = xi;
      if (berlekamp_massey(patched).degree() > B) continue;
      accept(try_prony(r, std::span<const Felt>(patched).subspan(0, 2 * B), B, D, w));
    }
  }
  if (accepted.empty()) return std::nullopt;
  return finish(accepted, block, Stage::Power1Err, bound_power_1err(B));
}

std::optional<DecodeResult> decode_power_2err(const EvalBlock& block, int B,
                                              std::int64_t D, const Felt& w,
                                              const DecodeOptions& options) {
  if (B < 1) throw InvalidArgument("decode_power_2err: B must be positive");
  check_window(block, static_cast<std::size_t>(4 * B), "decode_power_2err");
  const std::vector<Felt> a = block.values();
  const int r = block.entries.front().index;
  const std::span<const Felt> all(a);

  std::vector<SparsePoly> accepted;
  auto keep = [&](const SparsePoly& f) {
    if (mismatch_count(f, block) <= 2) accepted.push_back(f);
  };

  // one error in the first or the last B positions
  for (std::size_t offset : {std::size_t{0}, static_cast<std::size_t>(B)}) {
    if (auto sub = decode_power_1err(block.slice(offset, static_cast<std::size_t>(3 * B)), B, D, w)) {
      for (const auto& c : sub->candidates) keep(c.poly);
    }
  }
  // both errors in one half
  for (int offset : {0, 2 * B}) {
    if (auto f = try_prony(r + offset, all.subspan(static_cast<std::size_t>(offset), 2 * B), B, D, w)) {
      keep(*f);
    }
  }

  // one error in each of the two middle quarters
  std::vector<std::pair<int, int>> hypotheses;
  for (int l1 = B + 1; l1 <= 2 * B; ++l1) {
    for (int l2 = 2 * B + 1; l2 <= 3 * B; ++l2) hypotheses.emplace_back(l1, l2);
  }
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    std::vector<SparsePoly> local;
    for (std::size_t h = next++; h < hypotheses.size(); h = next++) {
      const auto [l1, l2] = hypotheses[h];
      const auto [d1, d2] = pham_system_sym(all, l1, l2, B);
      std::vector<std::pair<Felt, Felt>> sols;
      try {
        sols = solve_pham(d1, d2, B);
      } catch (const DegenerateSystem&) {
        continue;
      }
      for (const auto& [x1, x2] : sols) {
        std::vector<Felt> patched = a;
        patched[static_cast<std::size_t>(l1 - 1)] = x1;
        patched[static_cast<std::size_t>(l2 - 1)] = x2;
        if (berlekamp_massey(patched).degree() > B) continue;
        auto f = try_prony(r, std::span<const Felt>(patched).subspan(0, 2 * B), B, D, w);
        if (f && mismatch_count(*f, block) <= 2) local.push_back(*f);
      }
    }
    std::lock_guard lock(mu);
    accepted.insert(accepted.end(), local.begin(), local.end());
  };
  const int threads = std::min<int>(options.threads, static_cast<int>(hypotheses.size()));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(work);
  }

  if (accepted.empty()) return std::nullopt;
  return finish(accepted, block, Stage::Power2Err, bound_power_2err(B));
}

std::optional<DecodeResult> decode_cheb_1err(const EvalBlock& block, int B,
                                             std::int64_t D, const Felt& w) {
  if (B < 1) throw InvalidArgument("decode_cheb_1err: B must be positive");
  check_window(block, static_cast<std::size_t>(3 * B), "decode_cheb_1err");
  if (block.entries.front().index != 1) {
    throw InvalidArgument("decode_cheb_1err: window must start at index 1");
  }
  const std::vector<Felt> a = block.values();  // a[k] = a_{2k+1}

  std::vector<SparsePoly> accepted;
  auto accept = [&](const std::optional<SparsePoly>& f) {
    if (f && mismatch_count(*f, block) <= 1) accepted.push_back(*f);
  };

  // error among the last B positions
  accept(try_prony_chebyshev(a, B, D, w));

  for (int l = 1; l <= 2 * B; ++l) {
    const int r = l <= B ? 2 * l - 1 : 2 * (l - B) - 1;
    const UniPoly delta = fold_det_sym(a, r, 2 * l - 1, B);
    for (const Felt& xi : distinct_roots(delta)) {
      std::vector<Felt> patched = a;
      patched[static_cast<std::size_t>(l - 1)] = xi;
      if (berlekamp_massey(symmetrize_odd(patched, 3 * B)).degree() > 2 * B) continue;
      accept(try_prony_chebyshev(patched, B, D, w));
    }
  }
  if (accepted.empty()) return std::nullopt;
  return finish(accepted, block, Stage::Cheb1Err, bound_cheb_1err(B));
}

namespace {

std::optional<DecodeResult> decode_blocked(OracleBox& box, Basis basis, int B, std::int64_t D,
                                           int E, const PrimeField& field, std::uint64_t seed,
                                           const DecodeOptions& options) {
  if (D < 1 || D > (1LL << 30)) throw InvalidArgument("decode: D out of range");
  const ProbePlan plan = plan_probes(basis, field, B, static_cast<int>(D), E, seed);

  std::vector<EvalBlock> blocks;
  for (std::size_t s = 0; s < plan.points.size(); ++s) {
    std::vector<Felt> values;
    for (const Felt& pt : plan.points[s]) values.push_back(box.probe(pt));
    blocks.push_back(make_block(basis, plan.bases[s], 1, values));
  }

  DecodeResult out;
  out.probes_used = static_cast<int>(plan.total());
  std::vector<SparsePoly> pool;
  for (std::size_t s = 0; s < blocks.size(); ++s) {
    const EvalBlock& blk = blocks[s];
    const Felt& w = blk.base;
    const int len = static_cast<int>(blk.entries.size());
    std::optional<DecodeResult> sub;
    Stage stage;
    std::size_t bound;
    if (len == 2 * B) {
      stage = basis == Basis::PowerLaurent ? Stage::PronyTail : Stage::ChebPronyTail;
      bound = 1;
      const std::vector<Felt> v = blk.values();
      auto f = basis == Basis::PowerLaurent ? try_prony(1, v, B, D, w)
                                            : try_prony_chebyshev(v, B, D, w);
      if (f) sub = finish({*f}, blk, stage, bound);
    } else if (basis == Basis::PowerLaurent && len == 4 * B) {
      stage = Stage::Power2Err;
      bound = bound_power_2err(B);
      sub = decode_power_2err(blk, B, D, w, options);
    } else if (basis == Basis::PowerLaurent) {
      stage = Stage::Power1Err;
      bound = bound_power_1err(B);
      sub = decode_power_1err(blk, B, D, w);
    } else {
      stage = Stage::Cheb1Err;
      bound = bound_cheb_1err(B);
      sub = decode_cheb_1err(blk, B, D, w);
    }
    if (!sub) {
      out.stats.push_back({stage, static_cast<int>(s), 0, 0, bound});
      continue;
    }
    for (auto st : sub->stats) {
      st.block = static_cast<int>(s);
      out.stats.push_back(st);
    }
    for (const auto& c : sub->candidates) pool.push_back(c.poly);
  }

  const std::size_t raw = pool.size();
  dedup(pool);
  for (const auto& f : pool) {
    auto mism = verify_candidate(f, blocks);
    if (mism.size() <= static_cast<std::size_t>(E)) out.candidates.push_back({f, std::move(mism)});
  }
  out.stats.push_back({basis == Basis::PowerLaurent ? Stage::PowerUnion : Stage::ChebUnion, -1,
                       raw, out.candidates.size(),
                       basis == Basis::PowerLaurent ? bound_power_union(B, E)
                                                    : bound_cheb_union(B, E)});
  if (out.candidates.empty()) return std::nullopt;
  return out;
}

}  // namespace

std::optional<DecodeResult> decode_power_E(OracleBox& box, int B, std::int64_t D, int E,
                                           const PrimeField& field, std::uint64_t seed,
                                           const DecodeOptions& options) {
  return decode_blocked(box, Basis::PowerLaurent, B, D, E, field, seed, options);
}

std::optional<DecodeResult> decode_cheb_E(OracleBox& box, int B, std::int64_t D, int E,
                                          const PrimeField& field, std::uint64_t seed,
                                          const DecodeOptions& options) {
  return decode_blocked(box, Basis::Chebyshev1, B, D, E, field, seed, options);
}

std::optional<DecodeResult> decode_instance(const Instance& instance, OracleBox& box,
                                            const DecodeOptions& options) {
  return decode_blocked(box, instance.basis, instance.B, instance.D, instance.E, instance.field,
                        instance.seed, options);
}

}  // namespace spi
