#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "orebasis/integer.hpp"

namespace orebasis {

/// Dense polynomial over Z. coeffs()[i] is the coefficient of x^i; no
/// leading zeros are stored, so the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t degree);
  /// x - s
  static IntPoly linear(const Integer& s);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  /// Coefficient of x^i, zero beyond the degree.
  Integer coeff(std::size_t i) const;
  const Integer& leading() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  Integer evaluate(const Integer& x) const;
  IntPoly derivative() const;
  /// P(x + m)
  IntPoly taylor_shift(const Integer& m) const;
  /// P(k x)
  IntPoly scale_variable(const Integer& k) const;
  /// Divides every coefficient by d; throws unless the division is exact.
  IntPoly divide_exact(const Integer& d) const;
  IntPoly pow(unsigned e) const;
  /// P(Q(x))
  IntPoly compose(const IntPoly& q) const;
  /// gcd of the coefficients (nonnegative).
  Integer content() const;

  /// "x^4 + 2*x^2 - 4" style, parseable back by the CLI.
  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

/// Quotient and remainder of a by a monic divisor.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& monic_divisor);

ExtendedNat poly_vp(const IntPoly& P, const Prime& p);

/// Reduces coefficients into the symmetric range (-m/2, m/2].
IntPoly reduce_symmetric(const IntPoly& P, const Integer& m);

std::ostream& operator<<(std::ostream& os, const IntPoly& P);

}  // namespace orebasis
