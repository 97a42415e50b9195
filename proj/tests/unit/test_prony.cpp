#include <gtest/gtest.h>

#include <set>

#include "spi/prony.hpp"
#include "spi/rng.hpp"
#include "spi/scalar.hpp"

using namespace spi;

namespace {

std::vector<Felt> power_window(const SparsePoly& f, const Felt& w, int r, int n) {
  std::vector<Felt> out;
  for (int k = 0; k < n; ++k) out.push_back(f(w.pow(r + k)));
  return out;
}

// a_{2k+1}, k = 0..n-1
std::vector<Felt> odd_window(const SparsePoly& f, const Felt& w, int n) {
  const Felt half = w.field()(2).inv();
  std::vector<Felt> out;
  for (int k = 0; k < n; ++k) {
    const int j = 2 * k + 1;
    out.push_back(f((w.pow(j) + w.pow(-j)) * half));
  }
  return out;
}

Felt element_of_order_at_least(const PrimeField& F, std::uint64_t bound, Rng& rng) {
  for (;;) {
    const Felt w = F.from_residue(rng.between(2, static_cast<std::int64_t>(F.modulus()) - 1));
    if (order_at_least(w, bound)) return w;
  }
}

}  // namespace

TEST(TryProny, SpecCases) {
  const PrimeField F(101);
  const auto f = try_prony(1, std::vector<Felt>{F(12), F(48)}, 1, 10, F(2));
  ASSERT_TRUE(f);
  EXPECT_EQ(*f, SparsePoly(Basis::PowerLaurent, {{2, F(3)}}));
  const auto zero = try_prony(1, std::vector<Felt>(4, F(0)), 2, 10, F(2));
  ASSERT_TRUE(zero);
  EXPECT_TRUE(zero->is_zero());
  EXPECT_THROW(try_prony(1, std::vector<Felt>{F(1)}, 1, 10, F(2)), InvalidArgument);
}

TEST(TryProny, CorruptedRejected) {
  const PrimeField F(101);
  const SparsePoly f(Basis::PowerLaurent, {{1, F(1)}, {2, F(1)}});
  for (int pos = 0; pos < 2; ++pos) {
    auto a = power_window(f, F(2), 1, 2);
    a[pos] += F(5);
    const auto g = try_prony(1, a, 1, 10, F(2));
    // a one-term answer must reproduce the corrupted window, never f
    if (g) {
      EXPECT_NE(*g, f);
      EXPECT_EQ(power_window(*g, F(2), 1, 2), a);
    }
  }
  auto a = power_window(f, F(2), 1, 4);
  a[3] += F(1);
  EXPECT_EQ(try_prony(1, std::span<const Felt>(a).subspan(0, 2), 1, 3, F(2)), std::nullopt);
}

TEST(TryProny, DegreeOutOfRangeFails) {
  const PrimeField F(101);
  const SparsePoly f(Basis::PowerLaurent, {{10, F(3)}});
  EXPECT_EQ(try_prony(1, power_window(f, F(2), 1, 2), 1, 3, F(2)), std::nullopt);
}

TEST(TryProny, RoundTrip) {
  const PrimeField F(10007);
  Rng rng(30);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    const int B = static_cast<int>(rng.between(1, 5));
    const int D = static_cast<int>(rng.between(B, 400));
    const Felt w = element_of_order_at_least(F, 2 * D + 1, rng);
    const int t = static_cast<int>(rng.between(0, B));
    std::set<std::int64_t> degs;
    while (static_cast<int>(degs.size()) < t) degs.insert(rng.between(-D, D));
    std::vector<Term> terms;
    for (auto d : degs) terms.push_back({d, F.from_residue(rng.between(1, 10006))});
    const SparsePoly f(Basis::PowerLaurent, terms);
    const int r = static_cast<int>(rng.between(-10, 10));
    const auto g = try_prony(r, power_window(f, w, r, 2 * B), B, D, w);
    ASSERT_TRUE(g) << k;
    EXPECT_EQ(*g, f);
    ++checked;
  }
  EXPECT_EQ(checked, 200);
}

TEST(Symmetrize, Indices) {
  const PrimeField F(101);
  const std::vector<Felt> odd{F(1), F(3), F(5), F(7)};
  // i = -1..2 -> |2i - 1| = 3, 1, 1, 3
  EXPECT_EQ(symmetrize_odd(odd, 2), (std::vector<Felt>{F(3), F(1), F(1), F(3)}));
  EXPECT_THROW(symmetrize_odd(odd, 5), InvalidArgument);
}

TEST(TryPronyChebyshev, SpecCases) {
  const PrimeField F(10007);
  Rng rng(31);
  const Felt w = element_of_order_at_least(F, 4 * 10 + 1, rng);
  const SparsePoly f(Basis::Chebyshev1, {{3, F(4)}});
  EXPECT_EQ(try_prony_chebyshev(odd_window(f, w, 2), 1, 10, w), f);
  const SparsePoly c(Basis::Chebyshev1, {{0, F(5)}});
  EXPECT_EQ(odd_window(c, w, 2), (std::vector<Felt>{F(5), F(5)}));
  EXPECT_EQ(try_prony_chebyshev(odd_window(c, w, 2), 1, 10, w), c);
}

TEST(TryPronyChebyshev, FigureModel) {
  const PrimeField F(10007);
  Rng rng(32);
  const Felt w = element_of_order_at_least(F, 4 * 20 + 1, rng);
  const SparsePoly f(Basis::Chebyshev1, {{15, F(1)}, {11, F(-2)}, {2, F(1)}});
  EXPECT_EQ(try_prony_chebyshev(odd_window(f, w, 6), 3, 20, w), f);
}

TEST(TryPronyChebyshev, RoundTripAndNoFalseAccept) {
  const PrimeField F(10007);
  Rng rng(33);
  for (int k = 0; k < 100; ++k) {
    const int B = static_cast<int>(rng.between(1, 4));
    const int D = static_cast<int>(rng.between(B, 200));
    const Felt w = element_of_order_at_least(F, 4 * D + 1, rng);
    std::set<std::int64_t> degs;
    while (static_cast<int>(degs.size()) < B) degs.insert(rng.between(0, D));
    std::vector<Term> terms;
    for (auto d : degs) terms.push_back({d, F.from_residue(rng.between(1, 10006))});
    const SparsePoly f(Basis::Chebyshev1, terms);
    auto a = odd_window(f, w, 2 * B);
    EXPECT_EQ(try_prony_chebyshev(a, B, D, w), f);
    a[static_cast<std::size_t>(rng.below(a.size()))] += F.one();
    const auto g = try_prony_chebyshev(a, B, D, w);
    if (g) {
      EXPECT_NE(*g, f);
      EXPECT_EQ(odd_window(*g, w, 2 * B), a);
    }
  }
}
