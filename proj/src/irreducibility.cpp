#include "orebasis/irreducibility.hpp"

#include <algorithm>

#include "orebasis/finite_field.hpp"

namespace orebasis {

std::vector<Integer> divisors(const Integer& n0) {
  if (n0 == 0) throw Error("divisors of zero");
  Integer n = abs(n0);
  std::vector<std::pair<Integer, unsigned>> primes;
  for (Integer d = 2; d * d <= n; ++d) {
    if (d > 10000000) {
      if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) throw Error("divisors: constant term too large to factor");
      break;
    }
    unsigned k = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      n /= d;
      ++k;
    }
    if (k) primes.emplace_back(d, k);
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<Integer> out{1};
  for (const auto& [q, k] : primes) {
    std::size_t base = out.size();
    Integer pw = 1;
    for (unsigned e = 1; e <= k; ++e) {
      pw *= q;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> integer_roots(const IntPoly& f) {
  std::vector<Integer> roots;
  if (f.degree() < 1) return roots;
  if (f.coeff(0) == 0) {
    roots.push_back(0);
    std::vector<Integer> c(f.coeffs().begin() + 1, f.coeffs().end());
    for (auto& r : integer_roots(IntPoly(std::move(c))))
      if (r != 0) roots.push_back(r);
    return roots;
  }
  for (const auto& d : divisors(f.coeff(0))) {
    if (f.evaluate(d) == 0) roots.push_back(d);
    if (f.evaluate(-d) == 0) roots.push_back(-d);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool quartic_is_irreducible(const Integer& a, const Integer& b, const Integer& c) {
  IntPoly f(std::vector<Integer>{c, b, a, 0, 1});
  if (!integer_roots(f).empty()) return false;
  for (const auto& d : divisors(c)) {
    for (const Integer& v : {d, Integer(-d)}) {
      Integer w = c / v;
      Integer u2 = v + w - a;
      if (u2 == 0) {
        if (b == 0) return false;
        continue;
      }
      if (u2 < 0 || mpz_perfect_square_p(u2.get_mpz_t()) == 0) continue;
      Integer u = sqrt(u2);
      if (u * (w - v) == b || -u * (w - v) == b) return false;
    }
  }
  return true;
}

bool irreducible_mod_some_prime(const IntPoly& f, unsigned long prime_bound) {
  for (unsigned long q = 2; q < prime_bound; ++q) {
    if (mpz_probab_prime_p(Integer(q).get_mpz_t(), 30) == 0) continue;
    Prime P(q);
    if (mod(f.leading(), P.as_integer()) == 0) continue;
    auto fac = factor_mod_p(f, P);
    if (fac.size() == 1 && fac[0].second == 1) return true;
  }
  return false;
}

}  // namespace orebasis
