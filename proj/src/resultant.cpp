#include "orebasis/resultant.hpp"

#include <utility>

namespace orebasis {

IntPoly pseudo_remainder(const IntPoly& A, const IntPoly& B) {
  if (B.is_zero()) throw Error("pseudo_remainder: zero divisor");
  if (A.degree() < B.degree()) return A;
  std::vector<Integer> r = A.coeffs();
  const auto& b = B.coeffs();
  const int db = B.degree();
  const Integer& lb = B.leading();
  for (int i = A.degree(); i >= db; --i) {
    Integer q = r[i];
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= q * b[j];
  }
  return IntPoly(std::move(r));
}

Integer resultant(const IntPoly& P, const IntPoly& Q) {
  if (P.is_zero() || Q.is_zero()) return 0;
  IntPoly A = P;
  IntPoly B = Q;
  const Integer a = A.content();
  const Integer b = B.content();
  A = A.divide_exact(a);
  B = B.divide_exact(b);
  const Integer t = ipow(a, B.degree()) * ipow(b, A.degree());
  int s = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -1;
  }
  Integer g = 1;
  Integer h = 1;
  while (B.degree() > 0) {
    const int delta = A.degree() - B.degree();
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -s;
    IntPoly R = pseudo_remainder(A, B);
    A = B;
    B = R.divide_exact(g * ipow(h, delta));
    if (B.is_zero()) return 0;
    g = A.leading();
    if (delta == 0) continue;
    Integer num = ipow(g, delta);
    Integer den = ipow(h, delta - 1);
    mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  // B is a nonzero constant here.
  const int da = A.degree();
  Integer num = ipow(B.leading(), da);
  Integer result;
  if (da == 0) {
    result = num * h;
  } else {
    Integer den = ipow(h, da - 1);
    mpz_divexact(result.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return s * t * result;
}

Integer discriminant(const IntPoly& f) {
  const int n = f.degree();
  if (n < 1) throw Error("discriminant: degree must be positive");
  Integer r = resultant(f, f.derivative());
  Integer d;
  mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

}  // namespace orebasis
