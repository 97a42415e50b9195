#include "spi/field.hpp"

namespace spi {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (b %= m; e != 0; e >>= 1, b = mul_mod(b, b, m)) {
    if (e & 1) r = mul_mod(r, b, m);
  }
  return r;
}

}  // namespace

// Miller-Rabin; the first twelve prime bases are exact below 2^64.
bool is_prime(std::uint64_t n) {
  constexpr std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (std::uint64_t q : bases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : bases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int k = 1; k < s && composite; ++k) {
      x = mul_mod(x, x, n);
      composite = x != n - 1;
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= (std::uint64_t{1} << 62) || !is_prime(p)) {
    throw InvalidArgument("modulus must be an odd prime below 2^62, got " +
                          std::to_string(p));
  }
}

std::vector<std::uint64_t> PrimeField::group_order_factors() const {
  std::vector<std::uint64_t> out;
  std::uint64_t n = p_ - 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t Felt::centered() const {
  if (v_ > p_ / 2) return -static_cast<std::int64_t>(p_ - v_);
  return static_cast<std::int64_t>(v_);
}

Felt& Felt::operator+=(const Felt& o) {
  check_same(o);
  v_ += o.v_;
  if (v_ >= p_) v_ -= p_;
  return *this;
}

Felt& Felt::operator-=(const Felt& o) {
  check_same(o);
  v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
  return *this;
}

Felt& Felt::operator*=(const Felt& o) {
  check_same(o);
  v_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v_) * o.v_ %
                                  p_);
  return *this;
}

Felt Felt::inv() const {
  if (v_ == 0) throw ZeroInverse();
  // Extended Euclid on (v, p).
  std::int64_t r0 = static_cast<std::int64_t>(p_);
  std::int64_t r1 = static_cast<std::int64_t>(v_);
  std::int64_t s0 = 0;
  std::int64_t s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  return field()(s0);
}

Felt Felt::pow(std::int64_t e) const {
  Felt base = *this;
  if (e < 0) {
    base = base.inv();
    e = -e;
  }
  Felt acc(1, p_);
  auto k = static_cast<std::uint64_t>(e);
  while (k != 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

}  // namespace spi
