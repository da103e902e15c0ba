#include <functional>
#include <sstream>

#include "orebasis/order2.hpp"
#include "orebasis/quartic.hpp"
#include "orebasis/resultant.hpp"
#include "quartic_internal.hpp"

namespace orebasis {

using namespace detail;

namespace {

const Prime two(2);

ExtendedNat v2(const Integer& n) { return vp(n, two); }

Integer pow2(long w) { return ipow(Integer(2), static_cast<unsigned long>(w)); }

Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

bool is_even(const ExtendedNat& v) { return v.is_finite() && v.value() % 2 == 0; }
bool is_odd(const ExtendedNat& v) { return v.is_finite() && v.value() % 2 == 1; }

Integer odd_part_mod4(const Integer& n, const ExtendedNat& v) {
  return v.is_finite() ? mod(n / pow2(v.value()), Integer(4)) : Integer(0);
}

IntPoly quad(const Integer& c1, const Integer& c0) { return IntPoly(std::vector<Integer>{c0, c1, 1}); }

std::string valuations(const ExtendedNat& vc, const ExtendedNat& vb, const ExtendedNat& va) {
  return "(v(c), v(b), v(a)) = (" + vc.to_string() + ", " + vb.to_string() + ", " + va.to_string() + ")";
}

PIntegralBasis with_route(PIntegralBasis B, std::string route, std::vector<std::string> extra) {
  B.route = std::move(route);
  B.notes.insert(B.notes.end(), extra.begin(), extra.end());
  return B;
}

// Basis of a polynomial in tau = (theta - m)/p^k, rewritten in theta.
PIntegralBasis transported(const PIntegralBasis& B, const Integer& m, unsigned long k, const Prime& p) {
  auto notes = B.notes;
  if (m != 0 || k != 0) {
    std::ostringstream os;
    os << "tau = (theta - " << m << ")/" << p.value() << "^" << k;
    notes.push_back(os.str());
  }
  return finish(to_theta(B.generators, m, k, p), p, B.route, notes);
}

// x^4 + 2m x^3 + (A/4) x^2 + (B/8) x + C/16 = g(2x)/16
IntPoly half_scaled(const IntPoly& g) {
  return IntPoly(std::vector<Integer>{g.coeff(0) / 16, g.coeff(1) / 8, g.coeff(2) / 4, g.coeff(3) / 2, 1});
}

// x^4 + m x^3 + (A/16) x^2 + (B/64) x + C/256 = g(4x)/256
IntPoly quarter_scaled(const IntPoly& g) {
  return IntPoly(std::vector<Integer>{g.coeff(0) / 256, g.coeff(1) / 64, g.coeff(2) / 16, g.coeff(3) / 4, 1});
}

// 1, x, Q/2^floor(nu), x Q/2^floor(nu + 1/2)
std::vector<BasisElement> q_nu_generators(const IntPoly& Q, const Rational& nu) {
  IntPoly x{0, 1};
  return {{IntPoly{1}, 0},
          {x, 0},
          {Q, floor(nu).get_ui()},
          {x * Q, floor(nu + Rational(1, 2)).get_ui()}};
}

PIntegralBasis order2_basis(const IntPoly& F, const PhiChoice& choice, const Prime& p = two) {
  return basis_order2(make_second_order_context(F, p, choice.phi, choice.row));
}

// Table rows keyed by valuations; the first matching row wins.
struct QNuRow {
  std::string name;
  std::function<bool()> guard;
  std::function<std::pair<IntPoly, Rational>()> value;
};

struct QNuChoice {
  IntPoly Q;
  Rational nu;
  std::string row;
};

QNuChoice pick(const std::vector<QNuRow>& rows, const std::string& table) {
  for (const auto& r : rows)
    if (r.guard()) {
      auto [Q, nu] = r.value();
      return {Q, nu, table + ":" + r.name};
    }
  throw NoRow(table + ": no row matches");
}

// E1 with p = 2, v(a) > 1, v(b) > 1, v(c) = 2.
QNuChoice e1_row6_table(const Integer& a, const Integer& b, const Integer& c) {
  ExtendedNat va = v2(a), vb = v2(b), vt = v2(2 * a + c - 4), vs = v2(2 * a + b);
  const ExtendedNat E3(3), E4(4), E5(5);
  if (!(vt >= E3)) throw NoRow("E1 row 6 expansion: v(2a + c - 4) < 3");
  auto x2p = [](const Integer& c1, const Integer& c0) { return quad(c1, c0); };
  std::vector<QNuRow> rows{
      {"row1", [&] { return vb == 2; }, [&] { return std::pair<IntPoly, Rational>{x2p(0, 0), frac(5, 4)}; }},
      {"row2", [&] { return vb == 3 && vt == 3; }, [&] { return std::pair<IntPoly, Rational>{x2p(0, 2), frac(7, 4)}; }},
      {"row3", [&] { return va == 2 && vb == 3 && vt >= E4; }, [&] { return std::pair<IntPoly, Rational>{x2p(2, 2), frac(2, 1)}; }},
      {"row4", [&] { return va >= E3 && vb == 3 && vt >= E4; }, [&] { return std::pair<IntPoly, Rational>{x2p(0, 2), frac(7, 4)}; }},
      {"row5", [&] { return va == 2 && vb >= E4 && vt >= E4; }, [&] { return std::pair<IntPoly, Rational>{x2p(0, 2), frac(7, 4)}; }},
      {"row7", [&] { return va >= E3 && vb >= E4 && vt == 3; }, [&] { return std::pair<IntPoly, Rational>{x2p(0, 2), frac(2, 1)}; }},
      {"row8", [&] { return va >= E3 && vb >= E4 && vt == 4 && vs > E4; },
       [&] { return std::pair<IntPoly, Rational>{x2p(2, 2), frac(9, 4)}; }},
      {"row9", [&] { return va >= E3 && vb >= E4 && vt == 4 && vs == 4; },
       [&] { return std::pair<IntPoly, Rational>{x2p(2, -2), frac(5, 2)}; }},
      {"row10", [&] { return va >= E3 && vb >= E4 && vt >= E5 && vs == 4; },
       [&] { return std::pair<IntPoly, Rational>{x2p(2, 2), frac(9, 4)}; }},
      {"row11", [&] { return va >= E3 && vb >= E4 && vt >= E5 && vs > E4; },
       [&] { return std::pair<IntPoly, Rational>{x2p(2, 2), frac(5, 2)}; }},
  };
  if (!(va == 2 && vb >= E4 && vt == 3)) return pick(rows, "e1-row6");

  // Sub-table on u = v(b), v = v(c - a^2/4), d.
  ExtendedNat u = vb;
  Integer t = c - a * a / 4;
  ExtendedNat v = v2(t);
  Integer d = odd_part_mod4(t, v);
  Integer half = a / 2;
  Integer quarter = mod(a / 4, Integer(4));
  Integer minus_quarter = mod(-a / 4, Integer(4));
  long w = v.is_finite() ? v.value() / 2 : 0;
  bool next = v.is_finite() && u == v.value() + 1;
  bool beyond = v.is_finite() && u > v + ExtendedNat(1);
  std::vector<QNuRow> sub{
      {"sub1", [&] { return u <= v; }, [&] { return std::pair<IntPoly, Rational>{quad(0, half), Rational(2 * u.value() + 1, 4)}; }},
      {"sub2", [&] { return next && is_even(v) && d == 3; },
       [&] { return std::pair<IntPoly, Rational>{quad(0, half + pow2(w)), Rational(w) + frac(3, 4)}; }},
      {"sub3", [&] { return beyond && is_even(v) && d == 3; },
       [&] { return std::pair<IntPoly, Rational>{quad(0, half + pow2(w)), Rational(w + 1)}; }},
      {"sub4", [&] { return next && is_even(v) && d == 1; },
       [&] { return std::pair<IntPoly, Rational>{quad(pow2(w), half + pow2(w)), Rational(w + 1)}; }},
      {"sub5", [&] { return beyond && is_even(v) && d == 1; },
       [&] { return std::pair<IntPoly, Rational>{quad(0, half + pow2(w)), Rational(w) + frac(3, 4)}; }},
      {"sub6", [&] { return next && is_odd(v) && d == quarter; },
       [&] { return std::pair<IntPoly, Rational>{quad(pow2(w), half), Rational(w) + frac(5, 4)}; }},
      {"sub7", [&] { return beyond && is_odd(v) && d == quarter; },
       [&] { return std::pair<IntPoly, Rational>{quad(pow2(w), half), Rational(w) + frac(3, 2)}; }},
      {"sub8", [&] { return next && is_odd(v) && d == minus_quarter; },
       [&] { return std::pair<IntPoly, Rational>{quad(pow2(w), half + pow2(w + 1)), Rational(w) + frac(3, 2)}; }},
      {"sub9", [&] { return beyond && is_odd(v) && d == minus_quarter; },
       [&] { return std::pair<IntPoly, Rational>{quad(pow2(w), half), Rational(w) + frac(5, 4)}; }},
  };
  return pick(sub, "e1-row6:row6");
}

// g = x^4 + 4x^3 + A x^2 + B x + C with v(A) > 1, v(B) > 1, v(C) = 2.
QNuChoice e2_row4_table(const Integer& A, const Integer& B, const Integer& C) {
  ExtendedNat vA = v2(A), vB = v2(B + 8), vT = v2(2 * A + C + 4);
  const ExtendedNat E3(3), E4(4), E5(5);
  std::vector<QNuRow> rows{
      {"row1", [&] { return vB == 2; }, [&] { return std::pair<IntPoly, Rational>{quad(0, 0), frac(5, 4)}; }},
      {"row2", [&] { return vB == 3 && vT >= E4; }, [&] { return std::pair<IntPoly, Rational>{quad(0, 2), frac(7, 4)}; }},
      {"row3", [&] { return vA == 2 && vB == 3 && vT == 3; }, [&] { return std::pair<IntPoly, Rational>{quad(2, 2), frac(2, 1)}; }},
      {"row4", [&] { return vA == 2 && vB >= E4 && vT == 3; }, [&] { return std::pair<IntPoly, Rational>{quad(0, 2), frac(7, 4)}; }},
      {"row5", [&] { return vA == 2 && vB == 4 && vT >= E4; }, [&] { return std::pair<IntPoly, Rational>{quad(0, 2), frac(9, 4)}; }},
      {"row6", [&] { return vA == 2 && vB >= E5 && vT >= E5; }, [&] { return std::pair<IntPoly, Rational>{quad(0, -2), frac(5, 2)}; }},
      {"row7", [&] { return vA == 2 && vB >= E5 && vT == 4; }, [&] { return std::pair<IntPoly, Rational>{quad(0, 2), frac(5, 2)}; }},
      {"row8", [&] { return vA >= E3 && vB == 3 && vT == 3; }, [&] { return std::pair<IntPoly, Rational>{quad(0, 2), frac(7, 4)}; }},
      {"row10", [&] { return vA >= E3 && vB >= E4 && vT >= E4; }, [&] { return std::pair<IntPoly, Rational>{quad(0, 2), frac(2, 1)}; }},
  };
  if (!(vA >= E3 && vB >= E4 && vT == 3)) return pick(rows, "e2-row4");

  // Sub-table on u = v(B + 8 - 2A), v = v(C - (A - 4)^2/4), d, e.
  Integer s = B + 8 - 2 * A;
  Integer t = C - (A - 4) * (A - 4) / 4;
  ExtendedNat u = v2(s), v = v2(t);
  Integer d = odd_part_mod4(t, v);
  Integer e = odd_part_mod4(s, u);
  Integer half = -2 + A / 2;
  Integer plus = mod(1 + A / 4, Integer(4));
  Integer minus = mod(-1 + A / 4, Integer(4));
  long w = v.is_finite() ? v.value() / 2 : 0;
  bool same_odd = u == v && is_odd(v);
  std::vector<QNuRow> sub{
      {"sub1", [&] { return u < v || (u == v && is_even(u)); },
       [&] { return std::pair<IntPoly, Rational>{quad(2, half), Rational(2 * u.value() + 1, 4)}; }},
      {"sub2", [&] { return same_odd && d == plus && e == 1; },
       [&] { return std::pair<IntPoly, Rational>{quad(2 + pow2(w), half), Rational(w) + frac(5, 4)}; }},
      {"sub3", [&] { return same_odd && d == plus && e == 3; },
       [&] { return std::pair<IntPoly, Rational>{quad(2 + pow2(w), half + pow2(w + 1)), Rational(w) + frac(3, 2)}; }},
      {"sub4", [&] { return same_odd && d == minus && e == 3; },
       [&] { return std::pair<IntPoly, Rational>{quad(2 + pow2(w), half), Rational(w) + frac(5, 4)}; }},
      {"sub5", [&] { return same_odd && d == minus && e == 1; },
       [&] { return std::pair<IntPoly, Rational>{quad(2 + pow2(w), half), Rational(w) + frac(3, 2)}; }},
      {"sub6", [&] { return v.is_finite() && is_even(v) && u == v.value() + 1; },
       [&] { return std::pair<IntPoly, Rational>{quad(2, half + pow2(w)), Rational(w) + frac(3, 4)}; }},
      {"sub7", [&] { return is_even(v) && u > v + ExtendedNat(1) && d == 3; },
       [&] { return std::pair<IntPoly, Rational>{quad(2, half + pow2(w)), Rational(w + 1)}; }},
      {"sub8", [&] { return is_even(v) && u > v + ExtendedNat(1) && d == 1; },
       [&] { return std::pair<IntPoly, Rational>{quad(2 + pow2(w), half + pow2(w)), Rational(w + 1)}; }},
      {"sub9", [&] { return is_odd(v) && u > v; },
       [&] { return std::pair<IntPoly, Rational>{quad(2, half), Rational(w) + frac(3, 4)}; }},
  };
  return pick(sub, "e2-row4:row9");
}

// h = x^4 + 2x^3 + A' x^2 + B' x + C' with A', C' odd and B' even; basis
// 1, x, Q/2^nu, x Q/2^nu.
QNuChoice e2_row10_table(const Integer& A1, const Integer& B1, const Integer& C1) {
  Integer s = B1 + 1 - A1;
  Integer t = C1 - (A1 - 1) * (A1 - 1) / 4;
  ExtendedNat u = v2(s), v = v2(t);
  ExtendedNat r = min(u, v);
  Integer e = odd_part_mod4(s, u);
  Integer d = odd_part_mod4(t, v);
  Integer half = (A1 - 1) / 2;
  if (mod(A1, Integer(4)) == 1) {
    if (mod(C1, Integer(4)) == 1 || v2(B1) == 1) return {quad(0, 0), Rational(0), "e2-row10:a1-row1"};
    return {quad(1, 1), Rational(1), "e2-row10:a1-row2"};
  }
  if (r.is_infinite()) throw NoRow("e2-row10: u and v are both infinite");
  Integer k = u.is_finite() ? mod(A1 + pow2(u.value()), Integer(8)) : Integer(-1);
  std::vector<QNuRow> rows{
      {"a3-row1", [&] { return is_odd(r); }, [&] { return std::pair<IntPoly, Rational>{quad(1, half), Rational(r.value() / 2)}; }},
      {"a3-row2",
       [&] { return is_even(v) && u > v && (u == v.value() + 1 || d == 1); },
       [&] { return std::pair<IntPoly, Rational>{quad(1, half), Rational(v.value() / 2)}; }},
      {"a3-row3", [&] { return is_even(v) && u > v; },
       [&] { return std::pair<IntPoly, Rational>{quad(1, half + pow2(v.value() / 2)), Rational(v.value() / 2 + 1)}; }},
      {"a3-row4",
       [&] {
         if (!(u == v && is_even(u))) return false;
         long w = u.value() / 2;
         return d == mod((1 - A1) / 2, Integer(4)) || (w == 1 && e == 1) || (w > 1 && e == 3);
       },
       [&] { return std::pair<IntPoly, Rational>{quad(1, half), Rational(u.value() / 2)}; }},
      {"a3-row5", [&] { return u == v && is_even(u); },
       [&] { return std::pair<IntPoly, Rational>{quad(1 + pow2(u.value() / 2), half), Rational(u.value() / 2 + 1)}; }},
      {"a3-row6",
       [&] {
         if (!(is_even(u) && u < v)) return false;
         long w = u.value() / 2;
         return e == mod(1 + pow2(w), Integer(4)) || (v == 2 * w + 1 && k == 3) ||
                (v > ExtendedNat(2 * w + 1) && k == 7);
       },
       [&] { return std::pair<IntPoly, Rational>{quad(1, half), Rational(u.value() / 2)}; }},
      {"a3-row7", [&] { return is_even(u) && u < v; },
       [&] {
         long w = u.value() / 2;
         return std::pair<IntPoly, Rational>{quad(1 + pow2(w), half + pow2(w)), Rational(w + 1)};
       }},
  };
  return pick(rows, "e2-row10");
}

// The odd m and g = f(x + m) after the bad-case switches.
struct E2Shift {
  Integer m;
  IntPoly g;
  ExtendedNat vA, vB, vC;
  std::vector<std::string> notes;
};

E2Shift e2_shift(const IntPoly& f) {
  E2Shift S{Integer(1), {}, {}, {}, {}, {}};
  for (int guard = 0; guard < 64; ++guard) {
    S.g = f.taylor_shift(S.m);
    S.vA = v2(S.g.coeff(2));
    S.vB = v2(S.g.coeff(1));
    S.vC = v2(S.g.coeff(0));
    const ExtendedNat E2(2), E3(3), E4(4), E6(6), E8(8);
    long step = 0;
    if (S.vA > E2 && S.vB > E3 && S.vC == 4) step = 2;
    else if (S.vA > E4 && S.vB == 6 && S.vC == 8) step = 4;
    else if (S.vA == 4 && S.vB == 6 && S.vC > E8) step = 4;
    if (step == 0) return S;
    S.notes.push_back("m = " + S.m.get_str() + " avoided, " + valuations(S.vC, S.vB, S.vA));
    S.m += step;
  }
  throw Inconsistent("E2: the shift m did not settle");
}

int e2_row(const ExtendedNat& vC, const ExtendedNat& vB, const ExtendedNat& vA) {
  const ExtendedNat E1(1), E2(2), E3(3), E4(4), E5(5), E6(6), E8(8);
  if (vC == 1) return 1;
  if (vB == 1) return 2;
  if (vC == 2) return vA == 1 ? 3 : 4;
  if (vA == 1) return 5;
  if (vB == 2) return 6;
  if (vC == 3) return 7;
  if (vC == 4) {
    if (vB == 3) return vA == 2 ? 8 : 9;
    if (vA == 2) return 10;
    return 0;
  }
  if (vB == 3) return 12;
  if (vA == 2) return 11;
  if (vC == 5) return 13;
  if (vB == 4) return 14;
  if (vC == 6) {
    if (vA == 3) return 15;
    return vB == 5 ? 16 : 17;
  }
  if (vA == 3) return 18;
  if (vB == 5) return 19;
  if (vC == 7) return 20;
  if (vC == 8) {
    if (vB == 6) return vA == 4 ? 21 : 0;
    return 22;
  }
  if (vB == 6) return vA > E4 ? 23 : 0;
  return vA == 4 ? 24 : 25;
}

}  // namespace

PIntegralBasis basis_case_E1(const QuarticContext& ctx) {
  const Prime& p = ctx.p;
  IntPoly f = ctx.f();
  ExtendedNat va = vp(ctx.a, p), vb = vp(ctx.b, p), vc = vp(ctx.c, p);
  std::vector<std::string> notes{valuations(vc, vb, va)};
  const ExtendedNat E1(1), E2(2), E3(3);
  bool p2 = p.value() == 2;
  if (vc == 1) return finish(scaled_powers({0, 0, 0, 0}), p, "quartic:E1/row1", notes);
  if (vb == 1) return finish(scaled_powers({0, 0, 0, 1}), p, "quartic:E1/row2", notes);
  if (vc == 2 && va == 1) {
    if (p2) return finish(scaled_powers({0, 0, 1, 1}), p, "quartic:E1/row4", notes);
    ExtendedNat vt = vp(ctx.a * ctx.a - 4 * ctx.c, p);
    if (vt >= E3)
      return with_route(order2_basis(f, choose_phi(Order2Case::E1Row3, ctx.a, ctx.b, ctx.c, p), p),
                        "quartic:E1/row3", notes);
    ExtendedNat twice_nu = min(vb, vt);
    Integer modulus = p.power(static_cast<unsigned long>(twice_nu.value() + 2));
    Integer s = mod(ctx.a * inverse_mod(Integer(2), modulus), modulus);
    notes.push_back("phi = x^2 + " + s.get_str() + ", 2nu = " + twice_nu.to_string());
    return finish(q_nu_generators(quad(0, s), Rational(twice_nu.value(), 2)), p, "quartic:E1/row3", notes);
  }
  if (vc == 2) {
    if (!p2) return finish(scaled_powers({0, 0, 1, 1}), p, "quartic:E1/row5", notes);
    return with_route(order2_basis(f, choose_phi(Order2Case::E1Row6, ctx.a, ctx.b, ctx.c, p)), "quartic:E1/row6",
                      notes);
  }
  if (va == 1) {
    IterationResult it = iterate_to_regular(f, Integer(0), p);
    notes.push_back(iteration_note(it));
    IntPoly alpha = first_quotient(f, it.s);
    // Ordinate at abscissa one of the (x - s)-polygon through (2, 1).
    ExtendedNat u0 = vp(f.evaluate(it.s), p), u1 = vp(f.derivative().evaluate(it.s), p);
    long nu = (u0.value() + 1) / 2;
    if (u1.is_finite()) nu = std::min(nu, u1.value());
    std::string route = p2 ? "quartic:E1/row8" : "quartic:E1/row7";
    if (!p2 && nu != ctx.Delta / 2 - 1)
      notes.push_back("floor(Delta/2) - 1 = " + std::to_string(ctx.Delta / 2 - 1) + " overstated: v(f(s)) is even");
    notes.push_back("nu = " + std::to_string(nu));
    IntPoly x{0, 1};
    return finish({{IntPoly{1}, 0}, {x, 0}, {x * x, 1}, {alpha, static_cast<unsigned long>(nu)}}, p, route, notes);
  }
  if (vb == 2) return finish(scaled_powers({0, 0, 1, 2}), p, "quartic:E1/row9", notes);
  if (vc == 3) return finish(scaled_powers({0, 0, 1, 2}), p, "quartic:E1/row10", notes);
  throw NoRow("E1: input not reduced");
}

PIntegralBasis basis_case_E2(const QuarticContext& ctx) {
  const Prime& p = ctx.p;
  IntPoly f = ctx.f();
  E2Shift S = e2_shift(f);
  const IntPoly& g = S.g;
  int row = e2_row(S.vC, S.vB, S.vA);
  if (row == 0) throw Inconsistent("E2: bad case survived the shift");
  std::string route = "quartic:E2/row" + std::to_string(row);
  std::vector<std::string> notes = S.notes;
  notes.push_back("m = " + S.m.get_str() + ", " + valuations(S.vC, S.vB, S.vA));
  const Integer& m = S.m;
  if (row <= 12 && m != 1) throw Inconsistent("E2: rows 1-12 expect m = 1");

  auto in_omega = [&](const std::array<unsigned long, 4>& exps) {
    return finish(to_theta(scaled_powers(exps), m, 0, p), p, route, notes);
  };
  auto from_omega = [&](const std::vector<BasisElement>& gens) {
    return finish(to_theta(gens, m, 0, p), p, route, notes);
  };
  auto from_tau = [&](const PIntegralBasis& B, unsigned long k) {
    PIntegralBasis T = transported(B, m, k, p);
    T.route = route;
    T.notes.insert(T.notes.begin(), notes.begin(), notes.end());
    return T;
  };

  switch (row) {
    case 1: return in_omega({0, 0, 0, 0});
    case 2: return in_omega({0, 0, 0, 1});
    case 3: return in_omega({0, 0, 1, 1});
    case 4: {
      PhiChoice choice = choose_phi(Order2Case::E2Row4, g.coeff(2), g.coeff(1), g.coeff(0), p);
      return from_tau(order2_basis(g, choice), 0);
    }
    case 5:
    case 18:
    case 24: {
      IterationResult it = iterate_to_regular(g, Integer(0), p);
      notes.push_back(iteration_note(it));
      ExtendedNat gs = v2(g.evaluate(it.s)), gd = v2(g.derivative().evaluate(it.s));
      long nu = (gs.value() + S.vA.value()) / 2;
      if (gd.is_finite()) nu = std::min(nu, gd.value());
      notes.push_back("nu = " + std::to_string(nu));
      std::array<unsigned long, 3> e = row == 5 ? std::array<unsigned long, 3>{0, 0, 1}
                                       : row == 18 ? std::array<unsigned long, 3>{0, 1, 3}
                                                   : std::array<unsigned long, 3>{0, 2, 4};
      return from_omega({{IntPoly{1}, e[0]},
                         {IntPoly{0, 1}, e[1]},
                         {IntPoly{0, 0, 1}, e[2]},
                         {first_quotient(g, it.s), static_cast<unsigned long>(nu)}});
    }
    case 6:
    case 7: return in_omega({0, 0, 1, 2});
    case 8:
    case 9:
    case 12:
    case 13: return in_omega({0, 1, 2, 3});
    case 10: {
      IntPoly h = half_scaled(g);
      PhiChoice choice = choose_phi(Order2Case::E2Row10, h.coeff(2), h.coeff(1), h.coeff(0), p);
      PIntegralBasis B = p_integral_basis_regular(h, p, {{choice.phi, 2}});
      B.notes.push_back("phi = " + choice.phi.to_string() + " (" + choice.row + ")");
      return from_tau(B, 1);
    }
    case 11: {
      IntPoly h = half_scaled(g);
      ExtendedNat vc = v2(h.coeff(0)), vd = v2(h.evaluate(Integer(1)));
      IntPoly x{0, 1};
      auto lift = [&](long s0) {
        IterationResult it = iterate_to_regular(h, Integer(s0), p);
        notes.push_back(iteration_note(it));
        return it.s;
      };
      auto alpha = [&](const Integer& s) {
        return BasisElement{first_quotient(h, s), static_cast<unsigned long>(nu_length_two(h, s, p))};
      };
      PIntegralBasis B;
      if (vc == 1 && vd == 1) {
        route += "/sub1";
        B = finish(scaled_powers({0, 0, 0, 0}), p, route);
      } else if (vc == 1) {
        route += "/sub2";
        B = finish({{IntPoly{1}, 0}, {x, 0}, {x * x, 0}, alpha(lift(1))}, p, route);
      } else if (vd == 1) {
        route += "/sub3";
        B = finish({{IntPoly{1}, 0}, {x, 0}, {x * x, 0}, alpha(lift(0))}, p, route);
      } else if (mod(h.coeff(2), Integer(4)) == 3) {
        route += "/sub4";
        B = finish({{IntPoly{1}, 0}, {x, 0}, {IntPoly{0, 1, 1}, 1}, alpha(lift(1))}, p, route);
      } else {
        route += "/sub5";
        Integer s = lift(1), t = lift(0);
        if (nu_length_two(h, s, p) < nu_length_two(h, t, p)) std::swap(s, t);
        IntPoly beta = (first_quotient(h, s) - first_quotient(h, t)).divide_exact(s - t);
        B = finish({{IntPoly{1}, 0},
                    {x, 0},
                    {beta, static_cast<unsigned long>(nu_length_two(h, t, p))},
                    alpha(s)},
                   p, route);
      }
      return from_tau(B, 1);
    }
    case 14: return in_omega({0, 1, 2, 4});
    case 15: return in_omega({0, 1, 3, 4});
    case 16:
    case 17: {
      IntPoly h = half_scaled(g);
      return from_tau(order2_basis(h, choose_phi(Order2Case::E2Rows16_17, 0, 0, 0, p)), 1);
    }
    case 19:
    case 20: return in_omega({0, 1, 3, 5});
    case 21:
    case 22:
    case 23: return in_omega({0, 2, 4, 6});
    case 25: {
      IntPoly h = quarter_scaled(g);
      IterationResult it = iterate_to_regular(h, Integer(0), p);
      notes.push_back(iteration_note(it));
      const Integer& s = it.s;
      ExtendedNat h0 = v2(h.evaluate(s));
      IntPoly d1 = h.derivative();
      ExtendedNat h1 = v2(d1.evaluate(s));
      ExtendedNat h2 = v2(d1.derivative().evaluate(s) / 2);
      auto rmin = [](Rational acc, const ExtendedNat& v, long den) {
        if (v.is_infinite()) return acc;
        Rational q(v.value(), den);
        q.canonicalize();
        return q < acc ? q : acc;
      };
      Rational nu2 = rmin(rmin(Rational(h0.value(), 3), h1, 2), h2, 1);
      nu2.canonicalize();
      Rational nu1 = (Rational(h0.value()) + nu2) / 2;
      nu1 = rmin(nu1, h1, 1);
      notes.push_back("nu2 = " + nu2.get_str() + ", nu1 = " + nu1.get_str());
      IntPoly x{0, 1};
      PIntegralBasis B = finish({{IntPoly{1}, 0},
                                 {x, 0},
                                 {second_quotient(h, s), floor(nu2).get_ui()},
                                 {first_quotient(h, s), floor(nu1).get_ui()}},
                                p, route);
      return from_tau(B, 2);
    }
    default: break;
  }
  throw NoRow("E2: no row matches");
}

namespace {

PIntegralBasis reduced_table_basis(const Integer& a, const Integer& b, const Integer& c, const Prime& p) {
  QuarticCase kind = classify(a, b, c, p);
  if (kind == QuarticCase::E1) {
    if (!(vp(c, p) == 2 && vp(b, p) > ExtendedNat(1) && vp(a, p) > ExtendedNat(1)))
      throw NoRow("E1 input outside row 6");
    QNuChoice choice = e1_row6_table(a, b, c);
    return finish(q_nu_generators(choice.Q, choice.nu), p, "table:" + choice.row,
                  {"Q = " + choice.Q.to_string(), "nu = " + choice.nu.get_str()});
  }
  if (kind != QuarticCase::E2) throw NoRow("no expansion table for this case");
  E2Shift S = e2_shift(IntPoly(std::vector<Integer>{c, b, a, 0, 1}));
  int row = e2_row(S.vC, S.vB, S.vA);
  if (row == 4) {
    QNuChoice choice = e2_row4_table(S.g.coeff(2), S.g.coeff(1), S.g.coeff(0));
    PIntegralBasis B = finish(q_nu_generators(choice.Q, choice.nu), p, "table:" + choice.row,
                              {"Q = " + choice.Q.to_string(), "nu = " + choice.nu.get_str()});
    return transported(B, S.m, 0, p);
  }
  if (row == 10) {
    IntPoly h = half_scaled(S.g);
    QNuChoice choice = e2_row10_table(h.coeff(2), h.coeff(1), h.coeff(0));
    IntPoly x{0, 1};
    unsigned long nu = floor(choice.nu).get_ui();
    PIntegralBasis B = finish({{IntPoly{1}, 0}, {x, 0}, {choice.Q, nu}, {x * choice.Q, nu}}, p,
                              "table:" + choice.row, {"Q = " + choice.Q.to_string(), "nu = " + choice.nu.get_str()});
    return transported(B, S.m, 1, p);
  }
  throw NoRow("E2 input outside rows 4 and 10");
}

}  // namespace

PIntegralBasis quartic_table_basis(const Integer& a, const Integer& b, const Integer& c, const Prime& p) {
  if (p.value() != 2) throw NoRow("expansion tables are for p = 2");
  E1Reduction red = reduce_E1(a, b, c, p);
  PIntegralBasis B = reduced_table_basis(red.a, red.b, red.c, p);
  return red.steps == 0 ? B : transported(B, Integer(0), red.steps, p);
}

}  // namespace orebasis
