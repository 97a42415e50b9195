#include <gtest/gtest.h>

#include <set>

#include "spi/blackbox.hpp"
#include "spi/io.hpp"

using namespace spi;

TEST(OracleBox, Probe) {
  const PrimeField F(101);
  const SparsePoly f(Basis::PowerLaurent, {{2, F(3)}});
  OracleBox clean(f, {});
  EXPECT_EQ(clean.probe(F(4)), F(48));
  OracleBox faulty(f, {{F(4), F(7)}});
  EXPECT_EQ(faulty.probe(F(4)), F(7));
  EXPECT_EQ(faulty.probe(F(4)), F(7));
  EXPECT_EQ(faulty.probe(F(5)), F(75));
  EXPECT_EQ(faulty.probe_log(), (std::vector<Felt>{F(4), F(4), F(5)}));
  OracleBox zero(SparsePoly(Basis::PowerLaurent), {});
  EXPECT_EQ(zero.probe(F(33)), F(0));
}

TEST(OracleBox, RejectsCorrectPlannedValue) {
  const PrimeField F(101);
  const SparsePoly f(Basis::PowerLaurent, {{2, F(3)}});
  EXPECT_THROW(OracleBox(f, {{F(4), F(48)}}), InvalidArgument);
}

TEST(OracleBox, PoleAtZero) {
  const PrimeField F(101);
  OracleBox box(SparsePoly(Basis::PowerLaurent, {{-1, F(1)}}), {});
  EXPECT_THROW(box.probe(F(0)), PoleAtZero);
}

TEST(EvaluationCount, Formulas) {
  for (int B = 1; B <= 5; ++B) {
    EXPECT_EQ(evaluation_count(Basis::PowerLaurent, B, 0), 2 * B);
    EXPECT_EQ(evaluation_count(Basis::PowerLaurent, B, 2), 4 * B);
    EXPECT_EQ(evaluation_count(Basis::Chebyshev1, B, 1), 3 * B);
    for (int E = 0; E <= 12; ++E) {
      // floor(4E/3 + 2) B and floor(3E/2 + 2) B
      EXPECT_EQ(evaluation_count(Basis::PowerLaurent, B, E), ((4 * E) / 3 + 2) * B);
      EXPECT_EQ(evaluation_count(Basis::Chebyshev1, B, E), ((3 * E) / 2 + 2) * B);
    }
  }
  EXPECT_EQ(evaluation_count(Basis::PowerLaurent, 2, 3), 12);
  EXPECT_EQ(evaluation_count(Basis::Chebyshev1, 3, 2), 15);
}

TEST(ProbePlan, BlockShapes) {
  const PrimeField F(10007);
  for (int E = 0; E <= 7; ++E) {
    const ProbePlan p = plan_probes(Basis::PowerLaurent, F, 2, 50, E, 1);
    EXPECT_EQ(static_cast<int>(p.total()), evaluation_count(Basis::PowerLaurent, 2, E));
    EXPECT_EQ(p.bases.size(), static_cast<std::size_t>(E / 3 + 1));
    const ProbePlan c = plan_probes(Basis::Chebyshev1, F, 2, 50, E, 1);
    EXPECT_EQ(static_cast<int>(c.total()), evaluation_count(Basis::Chebyshev1, 2, E));
    std::set<Felt> pts;
    for (const auto& blk : c.points) pts.insert(blk.begin(), blk.end());
    EXPECT_EQ(pts.size(), c.total());
  }
}

TEST(MakeInstance, Trivial) {
  auto [inst, box] = make_instance({101, Basis::PowerLaurent, 1, 10, 0, std::nullopt}, 5);
  EXPECT_EQ(inst.hidden.sparsity(), 1u);
  EXPECT_TRUE(inst.errors.empty());
}

TEST(MakeInstance, ErrorsLandOnProbePoints) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto [inst, box] = make_instance({10007, Basis::PowerLaurent, 2, 50, 2, std::nullopt}, seed);
    EXPECT_EQ(inst.hidden.sparsity(), 2u);
    EXPECT_LE(inst.hidden.max_abs_degree(), 50);
    const ProbePlan plan = plan_probes(Basis::PowerLaurent, inst.field, 2, 50, 2, seed);
    int wrong = 0;
    for (const auto& blk : plan.points) {
      for (const auto& pt : blk) wrong += box.probe(pt) != inst.hidden(pt);
    }
    EXPECT_EQ(wrong, 2);
  }
}

TEST(MakeInstance, ChebyshevDegreesNonNegative) {
  auto [inst, box] = make_instance({10007, Basis::Chebyshev1, 4, 100, 3, std::nullopt}, 9);
  EXPECT_EQ(inst.hidden.sparsity(), 4u);
  for (const auto& t : inst.hidden.terms()) {
    EXPECT_GE(t.degree, 0);
    EXPECT_LE(t.degree, 100);
  }
  EXPECT_EQ(inst.errors.size(), 3u);
}

TEST(MakeInstance, FewerTerms) {
  auto [inst, box] = make_instance({10007, Basis::PowerLaurent, 4, 100, 1, 2}, 3);
  EXPECT_EQ(inst.hidden.sparsity(), 2u);
  EXPECT_THROW(make_instance({10007, Basis::PowerLaurent, 2, 100, 1, 3}, 3), InvalidArgument);
}

TEST(MakeInstance, Deterministic) {
  const InstanceConfig c{10007, Basis::Chebyshev1, 3, 60, 4, std::nullopt};
  const auto a = make_instance(c, 77).first;
  const auto b = make_instance(c, 77).first;
  EXPECT_EQ(a, b);
  EXPECT_EQ(serialize_instance(a), serialize_instance(b));
  EXPECT_NE(serialize_instance(a), serialize_instance(make_instance(c, 78).first));
}

TEST(MakeInstance, ImpossibleOrder) {
  EXPECT_THROW(make_instance({101, Basis::Chebyshev1, 1, 100, 0, std::nullopt}, 0), SelectionExhausted);
}
