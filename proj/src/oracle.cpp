#include "orebasis/oracle.hpp"

#include "orebasis/resultant.hpp"

namespace orebasis::oracle {

namespace {

using Matrix = std::vector<std::vector<Integer>>;

// Columns are g(theta) theta^i reduced mod f.
Matrix multiplication_matrix(const IntPoly& f, const IntPoly& g) {
  const int n = f.degree();
  Matrix M(n, std::vector<Integer>(n));
  IntPoly cur = divmod_monic(g, f).second;
  const IntPoly x{0, 1};
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < n; ++r) M[r][i] = cur.coeff(r);
    cur = divmod_monic(cur * x, f).second;
  }
  return M;
}

// Back substitution of v in a triangular basis; false if a coordinate is not p-integral.
bool p_integral_coordinates(std::vector<Rational> v, const std::vector<std::vector<Rational>>& rows, const Prime& p) {
  const int n = static_cast<int>(rows.size());
  for (int k = n - 1; k >= 0; --k) {
    if (v[k] == 0) continue;
    Rational c = v[k] / rows[k][k];
    if (vp_rational(c, p) < 0) return false;
    for (int i = 0; i <= k; ++i) v[i] -= c * rows[k][i];
  }
  return true;
}

std::vector<std::vector<Rational>> rows_of(const PIntegralBasis& B, int n, const Prime& p) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& e : B.elements) rows.push_back(coordinates(e, n, p));
  if (static_cast<int>(rows.size()) != n) throw PreconditionFailed("basis has the wrong rank");
  for (int k = 0; k < n; ++k) {
    bool triangular = rows[k][k] != 0;
    for (int i = k + 1; i < n; ++i) triangular = triangular && rows[k][i] == 0;
    if (!triangular) throw PreconditionFailed("basis is not triangular");
  }
  return rows;
}

Rational determinant(std::vector<std::vector<Rational>> A) {
  const std::size_t n = A.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && A[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(A[piv], A[c]);
      det = -det;
    }
    det *= A[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (A[r][c] == 0) continue;
      Rational factor = A[r][c] / A[c][c];
      for (std::size_t k = c; k < n; ++k) A[r][k] -= factor * A[c][k];
    }
  }
  return det;
}

// Power sums s_k = sum theta_i^k, k = 0..count-1, by Newton's identities.
std::vector<Integer> power_sums(const IntPoly& f, int count) {
  const int n = f.degree();
  // f = x^n + e_1' x^(n-1) + ... ; write a_k for the coefficient of x^(n-k).
  std::vector<Integer> a(n + 1);
  for (int k = 0; k <= n; ++k) a[k] = f.coeff(n - k);
  std::vector<Integer> s(count);
  s[0] = n;
  for (int k = 1; k < count; ++k) {
    Integer acc = 0;
    for (int i = 1; i < k && i <= n; ++i) acc += a[i] * s[k - i];
    if (k <= n)
      acc += k * a[k];
    s[k] = -acc;
  }
  return s;
}

}  // namespace

std::vector<Integer> char_poly(const IntPoly& f, const IntPoly& g) {
  if (!f.is_monic()) throw PreconditionFailed("char_poly: f must be monic");
  const int n = f.degree();
  Matrix A = multiplication_matrix(f, g);
  // Faddeev-LeVerrier; the divisions are exact for integer matrices.
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  Matrix M(n, std::vector<Integer>(n));
  for (int k = 1; k <= n; ++k) {
    Matrix AM(n, std::vector<Integer>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Integer acc = 0;
        for (int l = 0; l < n; ++l) acc += A[i][l] * M[l][j];
        AM[i][j] = acc;
      }
    for (int i = 0; i < n; ++i) AM[i][i] += c[n - k + 1];
    M = std::move(AM);
    Integer tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
    Integer q;
    Integer kk(k);
    mpz_divexact(q.get_mpz_t(), tr.get_mpz_t(), kk.get_mpz_t());
    c[n - k] = -q;
  }
  return c;
}

std::vector<Integer> resolvent(const IntPoly& f, const IntPoly& g, const Integer& scale) {
  const int n = f.degree();
  // Values at y = 0..n, then Lagrange interpolation with exact rationals.
  std::vector<Rational> values;
  for (int y = 0; y <= n; ++y) {
    IntPoly h = IntPoly::constant(scale * y) - g;
    values.emplace_back(resultant(f, h));
  }
  std::vector<Rational> poly(n + 1);
  for (int i = 0; i <= n; ++i) {
    std::vector<Rational> basis{1};
    Rational denom = 1;
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * j;
      }
      basis = std::move(next);
      denom *= i - j;
    }
    for (int k = 0; k <= n; ++k) poly[k] += values[i] * basis[k] / denom;
  }
  std::vector<Integer> out;
  for (auto& q : poly) {
    q.canonicalize();
    if (q.get_den() != 1) throw Inconsistent("resolvent: interpolation not integral");
    out.push_back(q.get_num());
  }
  return out;
}

bool is_integral(const IntPoly& f, const BasisElement& element, const Prime& p) {
  const int n = f.degree();
  if (element.denom_exp == 0) return true;
  auto c = char_poly(f, element.numerator);
  // alpha = g/p^e has char poly sum c_i y^i / p^(e (n - i)).
  for (int i = 0; i < n; ++i) {
    if (c[i] == 0) continue;
    Integer d = p.power(element.denom_exp * (n - i));
    if (!mpz_divisible_p(c[i].get_mpz_t(), d.get_mpz_t())) return false;
  }
  return true;
}

PIntegralBasis saturate(const IntPoly& f, const Prime& p, SaturationStats* stats) {
  return saturate_from(f, p, power_basis(f.degree(), p), stats);
}

PIntegralBasis saturate_from(const IntPoly& f, const Prime& p, PIntegralBasis start, SaturationStats* stats) {
  const int n = f.degree();
  const unsigned long q = p.value();
  PIntegralBasis B = std::move(start);
  SaturationStats local;
  for (;;) {
    ++local.rounds;
    unsigned long D = 0;
    for (const auto& e : B.elements) D = std::max(D, e.denom_exp);
    std::vector<IntPoly> scaled;
    for (const auto& e : B.elements) scaled.push_back(e.numerator * p.power(D - e.denom_exp));

    bool found = false;
    // Projective tuples: the last nonzero coordinate is 1.
    for (int last = 0; last < n && !found; ++last) {
      std::vector<unsigned long> c(last, 0);
      for (;;) {
        IntPoly g = scaled[last];
        for (int i = 0; i < last; ++i)
          if (c[i]) g += scaled[i] * Integer(c[i]);
        BasisElement cand{g, D + 1};
        ++local.integrality_tests;
        if (is_integral(f, cand, p)) {
          std::vector<BasisElement> gens = B.elements;
          gens.push_back(cand);
          B = triangularize(gens, n, p);
          found = true;
          break;
        }
        int i = 0;
        while (i < last && ++c[i] == q) c[i++] = 0;
        if (i == last) break;
      }
    }
    if (!found) break;
  }
  B.generators = B.elements;
  B.route = "oracle:saturation";
  if (stats) *stats = local;
  return B;
}

Rational basis_discriminant(const IntPoly& f, const Prime& p, const std::vector<BasisElement>& basis) {
  const int n = f.degree();
  auto s = power_sums(f, 2 * n - 1);
  std::vector<std::vector<Rational>> C;
  for (const auto& e : basis) C.push_back(coordinates(e, n, p));
  // Gram = C T C^t with T_ij = Tr(theta^(i+j)).
  std::vector<std::vector<Rational>> CT(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) CT[i][j] += C[i][k] * Rational(s[k + j]);
  std::vector<std::vector<Rational>> G(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) G[i][j] += CT[i][k] * C[j][k];
  return determinant(G);
}

DiscCheck disc_identity_check(const IntPoly& f, const Prime& p, const PIntegralBasis& basis) {
  DiscCheck r;
  r.disc_f = discriminant(f);
  r.disc_basis = basis_discriminant(f, p, basis.elements);
  r.index_valuation = basis.index_valuation;
  if (r.disc_f == 0 || r.disc_basis == 0) return r;
  r.vp_disc_f = vp(r.disc_f, p).value();
  r.vp_disc_basis = vp_rational(r.disc_basis, p);
  r.holds = r.vp_disc_f == 2 * r.index_valuation + r.vp_disc_basis;
  return r;
}

bool is_ring_closed(const IntPoly& f, const PIntegralBasis& basis, const Prime& p) {
  const int n = f.degree();
  auto rows = rows_of(basis, n, p);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const auto& a = basis.elements[i];
      const auto& b = basis.elements[j];
      IntPoly prod = divmod_monic(a.numerator * b.numerator, f).second;
      BasisElement e{prod, a.denom_exp + b.denom_exp};
      if (!p_integral_coordinates(coordinates(e, n, p), rows, p)) return false;
    }
  return true;
}

bool same_module(const PIntegralBasis& a, const PIntegralBasis& b, int n, const Prime& p) {
  auto ra = rows_of(a, n, p);
  auto rb = rows_of(b, n, p);
  for (const auto& r : ra)
    if (!p_integral_coordinates(r, rb, p)) return false;
  for (const auto& r : rb)
    if (!p_integral_coordinates(r, ra, p)) return false;
  return true;
}

}  // namespace orebasis::oracle
