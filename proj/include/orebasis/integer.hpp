#pragma once

#include <gmpxx.h>

#include "orebasis/errors.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace orebasis {

using Integer = mpz_class;
using Rational = mpq_class;

/// A natural number or infinity; the codomain of p-adic valuations.
class ExtendedNat {
 public:
  constexpr ExtendedNat() = default;
  constexpr ExtendedNat(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtendedNat infinity() {
    ExtendedNat e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  long value() const {
    if (infinite_) throw Error("ExtendedNat: value() of infinity");
    return value_;
  }

  friend constexpr ExtendedNat operator+(ExtendedNat a, ExtendedNat b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtendedNat(a.value_ + b.value_);
  }

  friend constexpr bool operator==(ExtendedNat a, ExtendedNat b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(ExtendedNat a, ExtendedNat b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  long value_ = 0;
  bool infinite_ = false;
};

inline ExtendedNat min(ExtendedNat a, ExtendedNat b) { return a < b ? a : b; }

inline std::ostream& operator<<(std::ostream& os, ExtendedNat e) { return os << e.to_string(); }

/// A rational prime, checked at construction.
class Prime {
 public:
  explicit Prime(unsigned long p);

  unsigned long value() const { return p_; }
  Integer as_integer() const { return Integer(p_); }
  Integer power(unsigned long k) const;

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  unsigned long p_;
};

ExtendedNat vp(const Integer& n, const Prime& p);

/// Largest power of p dividing a nonzero rational (may be negative).
long vp_rational(const Rational& q, const Prime& p);

/// Legendre symbol (a/p) for odd p.
int legendre(const Integer& a, const Prime& p);

/// Returns the smallest s in [0, p^k) with s^2 = a (mod p^k), or nullopt when
/// a is a non-residue mod p. Requires p odd and p not dividing a.
std::optional<Integer> sqrt_mod_pk(const Integer& a, const Prime& p, unsigned long k);

/// Inverse of a modulo m; m > 1 and gcd(a, m) = 1.
Integer inverse_mod(const Integer& a, const Integer& m);

/// Nonnegative residue of a mod m.
Integer mod(const Integer& a, const Integer& m);

Integer floor(const Rational& q);

Integer ipow(const Integer& base, unsigned long e);

}  // namespace orebasis
