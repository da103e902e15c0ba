#include "orebasis/int_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace orebasis {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear(const Integer& s) { return IntPoly(std::vector<Integer>{-s, 1}); }

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> r(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * other.coeffs_[j];
  coeffs_ = std::move(r);
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

IntPoly IntPoly::derivative() const {
  std::vector<Integer> r;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) r.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(r));
}

IntPoly IntPoly::taylor_shift(const Integer& m) const {
  // Horner in the ring Z[x] with x replaced by x + m.
  IntPoly r;
  IntPoly xm{0, 1};
  xm.coeffs_[0] = m;
  xm.normalize();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r *= xm;
    r += constant(*it);
  }
  return r;
}

IntPoly IntPoly::scale_variable(const Integer& k) const {
  std::vector<Integer> r = coeffs_;
  Integer pw = 1;
  for (auto& c : r) {
    c *= pw;
    pw *= k;
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::divide_exact(const Integer& d) const {
  std::vector<Integer> r = coeffs_;
  for (auto& c : r) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) throw Error("divide_exact: not divisible");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly r = constant(1);
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

IntPoly IntPoly::compose(const IntPoly& q) const {
  IntPoly r;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r *= q;
    r += constant(*it);
  }
  return r;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& monic_divisor) {
  if (!monic_divisor.is_monic()) throw Error("divmod_monic: divisor not monic");
  int dd = monic_divisor.degree();
  std::vector<Integer> rem = a.coeffs();
  if (a.degree() < dd) return {IntPoly(), a};
  std::vector<Integer> quot(a.degree() - dd + 1);
  const auto& d = monic_divisor.coeffs();
  for (int i = a.degree(); i >= dd; --i) {
    Integer q = rem[i];
    if (q == 0) continue;
    quot[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d[j];
  }
  rem.resize(dd);
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

ExtendedNat poly_vp(const IntPoly& P, const Prime& p) {
  ExtendedNat r = ExtendedNat::infinity();
  for (const auto& c : P.coeffs()) r = min(r, vp(c, p));
  return r;
}

IntPoly reduce_symmetric(const IntPoly& P, const Integer& m) {
  std::vector<Integer> r = P.coeffs();
  Integer half = m / 2;
  for (auto& c : r) {
    c = mod(c, m);
    if (c > half) c -= m;
  }
  return IntPoly(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const IntPoly& P) { return os << P.to_string(); }

}  // namespace orebasis
