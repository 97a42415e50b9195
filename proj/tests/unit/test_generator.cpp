#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "spi/generator.hpp"
#include "spi/rng.hpp"

using namespace spi;

namespace {

std::vector<Felt> random_values(Rng& rng, const PrimeField& F, int n) {
  std::vector<Felt> v;
  for (int k = 0; k < n; ++k) v.push_back(F.from_residue(rng.below(F.modulus())));
  return v;
}

// A Laurent sequence sum c_j rho_j^(r+k) of length n.
std::vector<Felt> exp_sum(const std::vector<Felt>& c, const std::vector<Felt>& rho, int r, int n) {
  std::vector<Felt> out;
  for (int k = 0; k < n; ++k) {
    Felt acc = c[0].field().zero();
    for (std::size_t j = 0; j < c.size(); ++j) acc += c[j] * rho[j].pow(r + k);
    out.push_back(acc);
  }
  return out;
}

}  // namespace

TEST(BerlekampMassey, SpecCases) {
  const PrimeField F(101);
  EXPECT_EQ(berlekamp_massey(std::vector<Felt>{F(12), F(48)}), UniPoly(F, {F(-4), F(1)}));
  EXPECT_EQ(berlekamp_massey(std::vector<Felt>(4, F(0))), UniPoly::constant(F.one()));
  std::vector<Felt> seq;
  for (int i = 1; i <= 4; ++i) seq.push_back(F(2) * F(3).pow(i) + F(5).pow(i));
  EXPECT_EQ(berlekamp_massey(seq), UniPoly(F, {F(15), F(-8), F(1)}));
}

TEST(BerlekampMassey, DegreeMatchesLinearComplexity) {
  Rng rng(10);
  for (std::uint64_t p : {11ULL, 101ULL, 10007ULL}) {
    const PrimeField F(p);
    for (int k = 0; k < 60; ++k) {
      const auto seq = random_values(rng, F, static_cast<int>(rng.between(1, 10)));
      const UniPoly lam = berlekamp_massey(seq);
      ASSERT_TRUE(lam.leading().is_one());
      EXPECT_EQ(lam.degree(), oracle::linear_complexity_naive(seq));
      // recurrence holds on the whole sequence
      const int L = lam.degree();
      for (std::size_t i = 0; i + L < seq.size(); ++i) {
        Felt acc = F.zero();
        for (int j = 0; j <= L; ++j) acc += lam.coeff(j) * seq[i + static_cast<std::size_t>(j)];
        EXPECT_TRUE(acc.is_zero());
      }
    }
  }
}

TEST(BerlekampMassey, CleanProny) {
  const PrimeField F(10007);
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    const int t = static_cast<int>(rng.between(1, 4));
    std::vector<Felt> c, rho;
    for (int j = 0; j < t; ++j) {
      c.push_back(F.from_residue(rng.between(1, 10006)));
      rho.push_back(F.from_residue(rng.between(1, 10006)));
    }
    if (std::set<Felt>(rho.begin(), rho.end()).size() != rho.size()) continue;
    const UniPoly lam = berlekamp_massey(exp_sum(c, rho, static_cast<int>(rng.between(-5, 5)), 2 * t + 2));
    EXPECT_EQ(lam.degree(), t);
    EXPECT_FALSE(lam.coeff(0).is_zero());
  }
}

TEST(Hankel, Layout) {
  const PrimeField F(101);
  std::vector<Felt> a;
  for (int i = 1; i <= 9; ++i) a.push_back(F(i * 10));
  const Matrix h1 = hankel_matrix(std::span<const Felt>(a).subspan(0, 3), 1, 1);
  EXPECT_EQ(h1, (Matrix{{F(10), F(20)}, {F(20), F(30)}}));
  const Matrix h = hankel_matrix(a, 1, 3);
  ASSERT_EQ(h.size(), 4u);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) EXPECT_EQ(h[i][j], F(10 * (1 + i + j)));
  }
  EXPECT_THROW(hankel_matrix(a, 4, 3), InvalidArgument);
  EXPECT_THROW(hankel_matrix(a, 0, 3), InvalidArgument);
  EXPECT_TRUE(determinant(hankel_matrix(std::vector<Felt>(5, F(7)), 1, 2)).is_zero());
}

TEST(Hankel, SymbolicDetPinned) {
  const PrimeField F(101);
  const std::vector<Felt> window{F(12), F(0), F(91)};
  EXPECT_EQ(hankel_det_sym(window, 1, 2, 1), UniPoly(F, {F(82), F(0), F(-1)}));
  EXPECT_THROW(hankel_det_sym(window, 1, 1, 1), InvalidArgument);
}

TEST(Hankel, SymbolicDetShapeAndOracle) {
  const PrimeField F(10007);
  Rng rng(12);
  for (int B = 1; B <= 4; ++B) {
    for (int k = 0; k < 20; ++k) {
      const auto v = random_values(rng, F, 3 * B);
      const int l = static_cast<int>(rng.between(B + 1, 2 * B));
      const UniPoly d = hankel_det_sym(v, l - B, l, B);
      EXPECT_EQ(d.degree(), B + 1);
      // sign of the anti-diagonal permutation
      EXPECT_EQ(d.leading(), F((B * (B + 1) / 2) % 2 ? -1 : 1));
      EXPECT_EQ(d, oracle::alpha1_only(oracle::cofactor_det(oracle::hankel_symbolic(v, l - B, B, l))));
    }
  }
}

TEST(Hankel, TrueValueIsRoot) {
  const PrimeField F(10007);
  Rng rng(13);
  for (int B = 1; B <= 4; ++B) {
    std::vector<Felt> c, rho;
    for (int j = 0; j < B; ++j) {
      c.push_back(F.from_residue(rng.between(1, 10006)));
      rho.push_back(F.from_residue(rng.between(1, 10006)));
    }
    auto a = exp_sum(c, rho, 1, 3 * B);
    for (int l = B + 1; l <= 2 * B; ++l) {
      const Felt truth = a[static_cast<std::size_t>(l - 1)];
      auto corrupted = a;
      corrupted[static_cast<std::size_t>(l - 1)] += F.one();
      EXPECT_TRUE(hankel_det_sym(corrupted, l - B, l, B)(truth).is_zero());
    }
  }
}

TEST(Fold, Layout) {
  const PrimeField F(10007);
  // odd[k] = a_{2k+1} = 100 + 2k + 1
  std::vector<Felt> odd;
  for (int k = 0; k < 9; ++k) odd.push_back(F(100 + 2 * k + 1));
  auto a = [&](int i) { return F(100 + i); };
  const Matrix g = fold_matrix(odd, 1, 3);
  EXPECT_EQ(g[0], (std::vector<Felt>{a(1) + a(1), a(3) + a(1), a(5) + a(3), a(7) + a(5)}));
  EXPECT_EQ(g[1], (std::vector<Felt>{a(3) + a(3), a(5) + a(1), a(7) + a(1), a(9) + a(3)}));
  const Matrix g1 = fold_matrix(odd, 1, 1);
  EXPECT_EQ(g1, (Matrix{{a(1) + a(1), a(3) + a(1)}, {a(3) + a(3), a(5) + a(1)}}));
  EXPECT_THROW(fold_matrix(odd, 2, 1), InvalidArgument);
  EXPECT_THROW(fold_matrix(odd, 3, 1), InvalidArgument);
}

TEST(Fold, SymbolicDetSmall) {
  const PrimeField F(10007);
  const Felt a3 = F(17), a5 = F(29), a1 = F(5);
  const std::vector<Felt> odd{a1, a3, a5};
  // det [[2x, a3 + x], [2 a3, a5 + x]]
  const UniPoly x = UniPoly::monomial(F.one(), 1);
  const UniPoly sub1 = x * F(2) * (UniPoly::constant(a5) + x) -
                       UniPoly::constant(F(2) * a3) * (UniPoly::constant(a3) + x);
  EXPECT_EQ(fold_det_sym(odd, 1, 1, 1), sub1);
  // det [[2 a1, x + a1], [2x, a5 + a1]]
  const UniPoly sub3 = UniPoly::constant(F(2) * a1 * (a5 + a1)) - x * F(2) * (x + UniPoly::constant(a1));
  EXPECT_EQ(fold_det_sym(odd, 1, 3, 1), sub3);
  EXPECT_THROW(fold_det_sym(odd, 1, 5, 1), InvalidArgument);
}

TEST(Fold, SymbolicDetDegreeAndOracle) {
  const PrimeField F(10007);
  Rng rng(14);
  for (int B = 1; B <= 4; ++B) {
    for (int k = 0; k < 15; ++k) {
      const auto odd = random_values(rng, F, 3 * B);
      const int r = 2 * static_cast<int>(rng.between(1, B)) - 1;
      for (int sym : {r, r + 2 * B}) {
        const UniPoly d = fold_det_sym(odd, r, sym, B);
        EXPECT_EQ(d.degree(), B + 1);
        EXPECT_EQ(d, oracle::alpha1_only(oracle::cofactor_det(oracle::fold_symbolic(odd, r, B, sym))));
      }
    }
  }
}

TEST(PhamSystem, SmallCase) {
  const PrimeField F(101);
  const std::vector<Felt> v{F(7), F(0), F(0), F(9)};
  const auto [d1, d2] = pham_system_sym(v, 2, 3, 1);
  const BiPoly a1 = BiPoly::monomial(F.one(), 1, 0), a2 = BiPoly::monomial(F.one(), 0, 1);
  EXPECT_EQ(d1, BiPoly::constant(F(7)) * a2 - a1 * a1);
  EXPECT_EQ(d2, a1 * BiPoly::constant(F(9)) - a2 * a2);
  EXPECT_THROW(pham_system_sym(v, 1, 3, 1), InvalidArgument);
  EXPECT_THROW(pham_system_sym(v, 2, 4, 1), InvalidArgument);
}

TEST(PhamSystem, LeadingTermsAndOracle) {
  const PrimeField F(10007);
  Rng rng(15);
  for (int B = 1; B <= 4; ++B) {
    for (int k = 0; k < 10; ++k) {
      const auto v = random_values(rng, F, 4 * B);
      const int l1 = static_cast<int>(rng.between(B + 1, 2 * B));
      const int l2 = static_cast<int>(rng.between(2 * B + 1, 3 * B));
      const auto [d1, d2] = pham_system_sym(v, l1, l2, B);
      const Felt sign = F((B * (B + 1) / 2) % 2 ? -1 : 1);
      EXPECT_EQ(d1.coeff(B + 1, 0), sign);
      EXPECT_EQ(d2.coeff(0, B + 1), sign);
      EXPECT_EQ(d1.total_degree(), B + 1);
      EXPECT_EQ(d2.total_degree(), B + 1);
      for (const auto& [e, c] : d1.coeffs()) {
        if (e.first + e.second == B + 1) EXPECT_EQ(e, (BiPoly::Exponents{B + 1, 0}));
      }
      for (const auto& [e, c] : d2.coeffs()) {
        if (e.first + e.second == B + 1) EXPECT_EQ(e, (BiPoly::Exponents{0, B + 1}));
      }
      EXPECT_EQ(d1, oracle::cofactor_det(oracle::hankel_symbolic(v, l1 - B, B, l1, l2)));
      EXPECT_EQ(d2, oracle::cofactor_det(oracle::hankel_symbolic(v, l2 - B, B, l1, l2)));
    }
  }
}

TEST(PhamSystem, ThreeTermLeadingSign) {
  // 4x4 case: the alpha1^4 coefficient is the sign of the order-4 reversal, +1
  const PrimeField F(10007);
  Rng rng(16);
  const auto v = random_values(rng, F, 12);
  const auto [d1, d2] = pham_system_sym(v, 4, 7, 3);
  EXPECT_EQ(d1.coeff(4, 0), F.one());
  EXPECT_EQ(d2.coeff(0, 4), F.one());
}

TEST(Determinants, NumericAndSymbolicAgainstCofactor) {
  Rng rng(17);
  for (std::uint64_t p : {11ULL, 10007ULL}) {
    const PrimeField F(p);
    for (int k = 0; k < 40; ++k) {
      const int n = static_cast<int>(rng.between(1, 6));
      Matrix m(static_cast<std::size_t>(n));
      SymMatrix s(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        m[i] = random_values(rng, F, n);
        for (int j = 0; j < n; ++j) {
          const auto e = random_values(rng, F, 3);
          s[i].push_back({e[0], rng.below(3) ? F.zero() : e[1], rng.below(3) ? F.zero() : e[2]});
        }
      }
      EXPECT_EQ(determinant(m), oracle::cofactor_det(m));
      const BiPoly ref = oracle::cofactor_det(oracle::lift(s));
      EXPECT_EQ(det_bivariate(s, F), ref);
      SymMatrix only1 = s;
      for (auto& row : only1) {
        for (auto& e : row) e.c2 = F.zero();
      }
      EXPECT_EQ(det_univariate(only1, F), oracle::alpha1_only(oracle::cofactor_det(oracle::lift(only1))));
    }
  }
}
