#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace spi {

// Error kinds. FAIL outcomes of the algorithms are not errors; those are
// reported through std::optional.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidArgument : Error {
  using Error::Error;
};
struct ZeroInverse : Error {
  ZeroInverse() : Error("inverse of zero") {}
};
struct FieldMismatch : Error {
  FieldMismatch() : Error("operands belong to different prime fields") {}
};
struct InvalidBasePoint : Error {
  using Error::Error;
};
struct SelectionExhausted : Error {
  using Error::Error;
};
struct PoleAtZero : Error {
  PoleAtZero() : Error("evaluation of a negative power at zero") {}
};
struct DegenerateSystem : Error {
  using Error::Error;
};

class Felt;

/// GF(p) for an odd prime p < 2^62.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  /// Reduces a signed integer into the field.
  Felt operator()(std::int64_t v) const;
  Felt from_residue(std::uint64_t r) const;
  Felt zero() const;
  Felt one() const;

  /// Distinct prime factors of p - 1, ascending.
  std::vector<std::uint64_t> group_order_factors() const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  friend class Felt;
  struct Unchecked {};
  PrimeField(std::uint64_t p, Unchecked) : p_(p) {}

  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// An element of GF(p). Carries its modulus so that mixing fields is caught.
class Felt {
 public:
  std::uint64_t residue() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  PrimeField field() const { return PrimeField(p_, PrimeField::Unchecked{}); }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  /// Signed representative in (-p/2, p/2].
  std::int64_t centered() const;

  Felt inv() const;
  Felt pow(std::int64_t e) const;

  Felt operator-() const { return Felt(v_ == 0 ? 0 : p_ - v_, p_); }
  Felt& operator+=(const Felt& o);
  Felt& operator-=(const Felt& o);
  Felt& operator*=(const Felt& o);
  Felt& operator/=(const Felt& o) { return *this *= o.inv(); }

  friend Felt operator+(Felt a, const Felt& b) { return a += b; }
  friend Felt operator-(Felt a, const Felt& b) { return a -= b; }
  friend Felt operator*(Felt a, const Felt& b) { return a *= b; }
  friend Felt operator/(Felt a, const Felt& b) { return a /= b; }

  friend bool operator==(const Felt& a, const Felt& b) {
    return a.v_ == b.v_ && a.p_ == b.p_;
  }
  // Orders by residue; used for canonical root and candidate ordering.
  friend std::strong_ordering operator<=>(const Felt& a, const Felt& b) {
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    return a.v_ <=> b.v_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Felt& a) {
    return os << a.v_;
  }

 private:
  friend class PrimeField;
  Felt(std::uint64_t v, std::uint64_t p) : v_(v), p_(p) {}
  void check_same(const Felt& o) const {
    if (p_ != o.p_) throw FieldMismatch();
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

inline Felt PrimeField::from_residue(std::uint64_t r) const {
  return Felt(r % p_, p_);
}
inline Felt PrimeField::zero() const { return Felt(0, p_); }
inline Felt PrimeField::one() const { return Felt(1, p_); }
inline Felt PrimeField::operator()(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += static_cast<std::int64_t>(p_);
  return Felt(static_cast<std::uint64_t>(m), p_);
}

}  // namespace spi
