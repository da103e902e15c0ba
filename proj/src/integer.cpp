#include "orebasis/integer.hpp"

namespace orebasis {

Prime::Prime(unsigned long p) : p_(p) {
  Integer z(p);
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    throw Error("not a prime: " + std::to_string(p));
}

Integer Prime::power(unsigned long k) const { return ipow(Integer(p_), k); }

ExtendedNat vp(const Integer& n, const Prime& p) {
  if (n == 0) return ExtendedNat::infinity();
  Integer rest;
  Integer pz(p.value());
  mp_bitcnt_t k = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
  return ExtendedNat(static_cast<long>(k));
}

long vp_rational(const Rational& q, const Prime& p) {
  if (q == 0) throw Error("vp_rational of zero");
  return vp(q.get_num(), p).value() - vp(q.get_den(), p).value();
}

int legendre(const Integer& a, const Prime& p) {
  if (p.value() == 2) throw Error("legendre: p must be odd");
  Integer r = mod(a, p.as_integer());
  return mpz_legendre(r.get_mpz_t(), p.as_integer().get_mpz_t());
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error("inverse_mod: not invertible");
  return r;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

namespace {

Integer powmod(const Integer& b, const Integer& e, const Integer& m) {
  Integer r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Tonelli-Shanks over F_p.
Integer sqrt_mod_p(const Integer& a, const Integer& p) {
  if (p == 2) return mod(a, p);
  Integer q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  Integer c = powmod(z, q, p);
  Integer x = powmod(a, (q + 1) / 2, p);
  Integer t = powmod(a, q, p);
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    Integer t2 = t;
    while (t2 != 1) {
      t2 = mod(t2 * t2, p);
      ++i;
    }
    Integer b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = mod(b * b, p);
    x = mod(x * b, p);
    c = mod(b * b, p);
    t = mod(t * c, p);
    m = i;
  }
  return x;
}

}  // namespace

std::optional<Integer> sqrt_mod_pk(const Integer& a, const Prime& p, unsigned long k) {
  if (p.value() == 2) throw Error("sqrt_mod_pk: p must be odd");
  if (k == 0) throw Error("sqrt_mod_pk: k must be positive");
  Integer pz = p.as_integer();
  if (mod(a, pz) == 0) throw Error("sqrt_mod_pk: p divides a");
  if (legendre(a, p) != 1) return std::nullopt;

  Integer s = sqrt_mod_p(mod(a, pz), pz);
  // Newton lifting s <- s - (s^2 - a) / (2s), doubling the precision.
  unsigned long prec = 1;
  while (prec < k) {
    prec = std::min(2 * prec, k);
    Integer modulus = p.power(prec);
    Integer correction = mod((s * s - a) * inverse_mod(2 * s, modulus), modulus);
    s = mod(s - correction, modulus);
  }
  Integer modulus = p.power(k);
  Integer other = mod(-s, modulus);
  return other < s ? other : s;
}

}  // namespace orebasis
