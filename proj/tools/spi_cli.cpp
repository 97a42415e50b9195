#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "acceptance.hpp"
#include "spi/decode.hpp"
#include "spi/io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;
constexpr int kUnsatisfiable = 3;
constexpr int kDecodeFail = 4;

spi::Basis parse_basis(const std::string& s) {
  if (s == "power") return spi::Basis::PowerLaurent;
  if (s == "cheb1") return spi::Basis::Chebyshev1;
  throw spi::InvalidArgument("unknown basis '" + s + "'");
}

// The points verify checks: the explicit probe list if the instance has
// one, otherwise the decoder's plan.
std::vector<spi::EvalBlock> verification_blocks(const spi::Instance& inst, spi::OracleBox& box) {
  std::vector<spi::EvalBlock> blocks;
  if (!inst.probes.empty()) {
    spi::EvalBlock b{inst.basis, inst.field.one(), {}};
    int i = 0;
    for (const auto& pt : inst.probes) b.entries.push_back({++i, pt, box.probe(pt)});
    blocks.push_back(std::move(b));
    return blocks;
  }
  const auto plan = spi::plan_probes(inst.basis, inst.field, inst.B, inst.D, inst.E, inst.seed);
  for (std::size_t s = 0; s < plan.points.size(); ++s) {
    std::vector<spi::Felt> values;
    for (const auto& pt : plan.points[s]) values.push_back(box.probe(pt));
    blocks.push_back(spi::make_block(inst.basis, plan.bases[s], 1, values));
  }
  return blocks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse polynomial interpolation with erroneous evaluations"};
  app.require_subcommand(1);

  std::uint64_t p = 0, seed = 0;
  std::string basis_str, out_path, instance_path, poly_path;
  int B = 0, D = 0, E = 0, threads = 1, max_errors = 0;
  std::optional<int> t;

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--p", p, "prime modulus")->required();
  gen->add_option("--basis", basis_str, "power or cheb1")->required()->check(CLI::IsMember({"power", "cheb1"}));
  gen->add_option("--B", B, "sparsity bound")->required();
  gen->add_option("--D", D, "degree bound")->required();
  gen->add_option("--E", E, "number of errors")->required();
  gen->add_option("--t", t, "number of terms (default B)");
  gen->add_option("--seed", seed, "seed")->required();
  gen->add_option("--out", out_path, "instance file")->required();

  auto* decode = app.add_subcommand("decode", "probe the embedded oracle and decode");
  decode->add_option("--instance", instance_path, "instance file")->required();
  decode->add_option("--out", out_path, "result file")->required();
  decode->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "count mismatches of a polynomial");
  verify->add_option("--instance", instance_path, "instance file")->required();
  verify->add_option("--poly", poly_path, "polynomial file")->required();
  verify->add_option("--max-errors", max_errors, "allowed mismatches")->required()->check(CLI::NonNegativeNumber);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance grid");
  selftest->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      auto [inst, box] = spi::make_instance({p, parse_basis(basis_str), B, D, E, t}, seed);
      spi::write_file(out_path, spi::serialize_instance(inst));
      std::cout << "wrote " << out_path << " (N = " << spi::evaluation_count(inst.basis, B, E)
                << ", " << inst.errors.size() << " errors)\n";
      return kOk;
    }
    if (*decode) {
      const spi::Instance inst = spi::parse_instance(spi::read_file(instance_path));
      spi::OracleBox box = inst.oracle();
      const auto res = spi::decode_instance(inst, box, spi::DecodeOptions{threads});
      spi::ResultFile out{inst.field, inst.basis, spi::evaluation_count(inst.basis, inst.B, inst.E), {}};
      if (res) out.candidates = res->candidates;
      spi::write_file(out_path, spi::serialize_result(out));
      std::cout << out.candidates.size() << " candidate(s), N = " << out.N << "\n";
      return res ? kOk : kDecodeFail;
    }
    if (*verify) {
      const spi::Instance inst = spi::parse_instance(spi::read_file(instance_path));
      const spi::SparsePoly f = spi::parse_poly(spi::read_file(poly_path), inst.field, inst.basis);
      spi::OracleBox box = inst.oracle();
      const auto mism = spi::verify_candidate(f, verification_blocks(inst, box));
      std::cout << "mismatches " << mism.size();
      for (const auto& pos : mism) std::cout << " " << pos.block << ":" << pos.index;
      std::cout << "\n";
      return static_cast<int>(mism.size()) <= max_errors ? kOk : kRejected;
    }
    if (*selftest) {
      const bool ok = spi::acceptance::report(spi::acceptance::run_all({threads}), std::cout);
      return ok ? kOk : kRejected;
    }
  } catch (const spi::SelectionExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnsatisfiable;
  } catch (const spi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
