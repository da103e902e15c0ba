#include "orebasis/finite_field.hpp"

#include <algorithm>
#include <sstream>

namespace orebasis {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 reduce_integer(const Integer& n, u64 p) {
  Integer r = mod(n, Integer(p));
  return r.get_ui();
}

}  // namespace

FiniteField::FiniteField(const Prime& p, const IntPoly& phi) : p_(p) {
  if (phi.degree() < 1 || !phi.is_monic()) throw Error("FiniteField: modulus must be monic of degree >= 1");
  for (const auto& c : phi.coeffs()) modulus_.push_back(reduce_integer(c, p.value()));
}

FiniteField FiniteField::prime_field(const Prime& p) { return FiniteField(p, IntPoly{0, 1}); }

Integer FiniteField::order() const { return p_.power(degree()); }

u64 FiniteField::mulmod(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p_.value()); }

u64 FiniteField::invmod(u64 a) const {
  if (a == 0) throw Error("FiniteField: division by zero");
  return inverse_mod(Integer(a), Integer(p_.value())).get_ui();
}

FqElem FiniteField::zero() const { return FqElem{std::vector<u64>(degree(), 0)}; }

FqElem FiniteField::one() const {
  FqElem e = zero();
  e.rep[0] = 1;
  return e;
}

FqElem FiniteField::from_integer(const Integer& n) const {
  FqElem e = zero();
  e.rep[0] = reduce_integer(n, p_.value());
  return e;
}

FqElem FiniteField::from_poly(const IntPoly& P) const {
  const u64 p = p_.value();
  std::vector<u64> r;
  for (const auto& c : P.coeffs()) r.push_back(reduce_integer(c, p));
  const unsigned m = degree();
  for (std::size_t i = r.size(); i-- > m;) {
    u64 q = r[i];
    if (q == 0) continue;
    for (unsigned j = 0; j <= m; ++j) {
      u64 t = mulmod(q, modulus_[j]);
      std::size_t k = i - m + j;
      r[k] = (r[k] + p - t) % p;
    }
  }
  r.resize(m, 0);
  return FqElem{std::move(r)};
}

IntPoly FiniteField::lift(const FqElem& a) const {
  std::vector<Integer> c;
  const u64 p = p_.value();
  for (u64 x : a.rep) {
    Integer v(x);
    if (x > p / 2) v -= Integer(p);
    c.push_back(v);
  }
  return IntPoly(std::move(c));
}

bool FiniteField::is_zero(const FqElem& a) const {
  return std::all_of(a.rep.begin(), a.rep.end(), [](u64 x) { return x == 0; });
}

FqElem FiniteField::add(const FqElem& a, const FqElem& b) const {
  FqElem r = a;
  for (unsigned i = 0; i < degree(); ++i) {
    r.rep[i] += b.rep[i];
    if (r.rep[i] >= p_.value() || r.rep[i] < b.rep[i]) r.rep[i] -= p_.value();
  }
  return r;
}

FqElem FiniteField::neg(const FqElem& a) const {
  FqElem r = a;
  for (auto& x : r.rep)
    if (x != 0) x = p_.value() - x;
  return r;
}

FqElem FiniteField::sub(const FqElem& a, const FqElem& b) const { return add(a, neg(b)); }

FqElem FiniteField::mul(const FqElem& a, const FqElem& b) const {
  const unsigned m = degree();
  const u64 p = p_.value();
  std::vector<u64> prod(2 * m - 1, 0);
  for (unsigned i = 0; i < m; ++i) {
    if (a.rep[i] == 0) continue;
    for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + mulmod(a.rep[i], b.rep[j])) % p;
  }
  for (std::size_t i = prod.size(); i-- > m;) {
    u64 q = prod[i];
    if (q == 0) continue;
    for (unsigned j = 0; j <= m; ++j) {
      std::size_t k = i - m + j;
      prod[k] = (prod[k] + p - mulmod(q, modulus_[j])) % p;
    }
  }
  prod.resize(m);
  return FqElem{std::move(prod)};
}

FqElem FiniteField::pow(const FqElem& a, const Integer& e) const {
  if (e < 0) return pow(inv(a), -e);
  FqElem r = one();
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
  }
  return r;
}

FqElem FiniteField::inv(const FqElem& a) const {
  if (is_zero(a)) throw Error("FiniteField: division by zero");
  if (degree() == 1) return FqElem{{invmod(a.rep[0])}};
  return pow(a, order() - 2);
}

FqElem FiniteField::frobenius(const FqElem& a) const { return pow(a, p_.as_integer()); }

FqElem FiniteField::pth_root(const FqElem& a) const {
  if (degree() == 1) return a;
  return pow(a, p_.power(degree() - 1));
}

FqElem FiniteField::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<u64> dist(0, p_.value() - 1);
  FqElem e = zero();
  for (auto& x : e.rep) x = dist(rng);
  return e;
}

std::string FiniteField::to_string(const FqElem& a) const {
  if (degree() == 1) return std::to_string(a.rep[0]);
  std::vector<Integer> c;
  for (u64 x : a.rep) c.emplace_back(x);
  std::string s = IntPoly(std::move(c)).to_string("x");
  return degree() > 1 && s.find_first_of("+- ") != std::string::npos ? "(" + s + ")" : s;
}

namespace fq {

void normalize(FqPoly& f) {
  while (!f.empty() && std::all_of(f.back().rep.begin(), f.back().rep.end(), [](u64 x) { return x == 0; }))
    f.pop_back();
}

int degree(const FqPoly& a) { return static_cast<int>(a.size()) - 1; }

FqPoly add(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  normalize(r);
  return r;
}

FqPoly sub(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  normalize(r);
  return r;
}

FqPoly mul(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (F.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  normalize(r);
  return r;
}

std::pair<FqPoly, FqPoly> divmod(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  if (b.empty()) throw Error("polynomial division by zero");
  FqPoly r = a;
  normalize(r);
  if (r.size() < b.size()) return {{}, r};
  FqPoly q(r.size() - b.size() + 1, F.zero());
  FqElem lead_inv = F.inv(b.back());
  for (std::size_t shift = r.size() - b.size() + 1; shift-- > 0;) {
    std::size_t i = shift + b.size() - 1;
    if (F.is_zero(r[i])) continue;
    FqElem c = F.mul(r[i], lead_inv);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = F.sub(r[shift + j], F.mul(c, b[j]));
  }
  normalize(q);
  normalize(r);
  return {q, r};
}

FqPoly rem(const FiniteField& F, const FqPoly& a, const FqPoly& b) { return divmod(F, a, b).second; }

FqPoly monic(const FiniteField& F, const FqPoly& a) {
  if (a.empty()) return a;
  FqElem li = F.inv(a.back());
  FqPoly r = a;
  for (auto& c : r) c = F.mul(c, li);
  return r;
}

FqPoly gcd(const FiniteField& F, FqPoly a, FqPoly b) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    FqPoly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

FqPoly derivative(const FiniteField& F, const FqPoly& a) {
  FqPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(F.mul(F.from_integer(Integer(static_cast<unsigned long>(i))), a[i]));
  normalize(r);
  return r;
}

FqPoly powmod(const FiniteField& F, const FqPoly& base, const Integer& e, const FqPoly& m) {
  FqPoly r{F.one()};
  r = rem(F, r, m);
  FqPoly b = rem(F, base, m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return r;
  for (std::size_t i = bits; i-- > 0;) {
    r = rem(F, mul(F, r, r), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(F, mul(F, r, b), m);
  }
  return r;
}

namespace {

FqPoly pth_root_poly(const FiniteField& F, const FqPoly& f) {
  const u64 p = F.characteristic();
  FqPoly r;
  for (std::size_t i = 0; i < f.size(); i += p) r.push_back(F.pth_root(f[i]));
  normalize(r);
  return r;
}

bool is_one(const FqPoly& f) { return f.size() == 1; }

FqPoly x_poly(const FiniteField& F) { return {F.zero(), F.one()}; }

std::vector<std::pair<FqPoly, unsigned>> distinct_degree(const FiniteField& F, FqPoly f) {
  std::vector<std::pair<FqPoly, unsigned>> out;
  const FqPoly x = x_poly(F);
  FqPoly h = rem(F, x, f);
  const Integer q = F.order();
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(degree(f)); ++d) {
    h = powmod(F, h, q, f);
    FqPoly g = gcd(F, f, sub(F, h, x));
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      f = divmod(F, f, g).first;
      h = rem(F, h, f);
    }
  }
  if (degree(f) > 0) out.emplace_back(monic(F, f), static_cast<unsigned>(degree(f)));
  return out;
}

void equal_degree(const FiniteField& F, const FqPoly& f, unsigned d, std::mt19937_64& rng,
                  std::vector<FqPoly>& out) {
  const int n = degree(f);
  if (n == static_cast<int>(d)) {
    out.push_back(monic(F, f));
    return;
  }
  const Integer q = F.order();
  const bool odd = F.characteristic() != 2;
  for (;;) {
    FqPoly a;
    for (int i = 0; i < n; ++i) a.push_back(F.random(rng));
    normalize(a);
    if (degree(a) < 1) continue;
    FqPoly b;
    if (odd) {
      Integer e = (ipow(q, d) - 1) / 2;
      b = sub(F, powmod(F, a, e, f), FqPoly{F.one()});
    } else {
      // Trace from F_{q^d} down to F_2 applied to a.
      FqPoly t = a;
      b = a;
      for (unsigned i = 1; i < F.degree() * d; ++i) {
        t = rem(F, mul(F, t, t), f);
        b = add(F, b, t);
      }
    }
    FqPoly g = gcd(F, f, b);
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, divmod(F, f, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<FqPoly, unsigned>> squarefree(const FiniteField& F, const FqPoly& f0) {
  std::vector<std::pair<FqPoly, unsigned>> out;
  FqPoly f = monic(F, f0);
  if (degree(f) < 1) return out;
  FqPoly c = gcd(F, f, derivative(F, f));
  FqPoly w = divmod(F, f, c).first;
  unsigned i = 1;
  while (!is_one(w)) {
    FqPoly y = gcd(F, w, c);
    FqPoly fac = divmod(F, w, y).first;
    if (degree(fac) > 0) out.emplace_back(monic(F, fac), i);
    w = y;
    c = divmod(F, c, y).first;
    ++i;
  }
  if (degree(c) > 0) {
    const unsigned p = static_cast<unsigned>(F.characteristic());
    for (auto& [g, k] : squarefree(F, pth_root_poly(F, c))) out.emplace_back(g, k * p);
  }
  return out;
}

std::vector<std::pair<FqPoly, unsigned>> factor(const FiniteField& F, const FqPoly& f,
                                                const FactorOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<std::pair<FqPoly, unsigned>> out;
  for (auto& [g, k] : squarefree(F, f)) {
    for (auto& [h, d] : distinct_degree(F, g)) {
      std::vector<FqPoly> pieces;
      equal_degree(F, h, d, rng, pieces);
      for (auto& piece : pieces) out.emplace_back(std::move(piece), k);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return std::lexicographical_compare(a.first.rbegin(), a.first.rend(), b.first.rbegin(), b.first.rend());
  });
  return out;
}

bool is_separable(const FiniteField& F, const FqPoly& R) {
  FqPoly r = R;
  normalize(r);
  if (r.empty()) throw Error("is_separable: zero polynomial");
  FqPoly d = derivative(F, r);
  if (d.empty()) return degree(r) == 0;
  return degree(gcd(F, r, d)) == 0;
}

bool is_irreducible(const FiniteField& F, const FqPoly& f) {
  auto fac = factor(F, f);
  return fac.size() == 1 && fac[0].second == 1;
}

std::string to_string(const FiniteField& F, const FqPoly& f, const std::string& var) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(f); i >= 0; --i) {
    if (F.is_zero(f[i])) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = f[i] == F.one();
    if (!unit || i == 0) os << F.to_string(f[i]);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace fq

FqPoly reduce_mod_p(const FiniteField& Fp, const IntPoly& f) {
  FqPoly r;
  for (const auto& c : f.coeffs()) r.push_back(Fp.from_integer(c));
  fq::normalize(r);
  return r;
}

std::vector<std::pair<IntPoly, unsigned>> factor_mod_p(const IntPoly& f, const Prime& p,
                                                       const FactorOptions& options) {
  FiniteField Fp = FiniteField::prime_field(p);
  FqPoly fbar = reduce_mod_p(Fp, f);
  if (fbar.empty()) throw PreconditionFailed("factor_mod_p: f is zero mod p");
  std::vector<std::pair<IntPoly, unsigned>> out;
  for (auto& [g, k] : fq::factor(Fp, fbar, options)) {
    std::vector<Integer> c;
    for (const auto& e : g) c.push_back(Fp.lift(e).coeff(0));
    out.emplace_back(IntPoly(std::move(c)), k);
  }
  return out;
}

}  // namespace orebasis
