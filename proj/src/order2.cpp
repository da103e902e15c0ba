#include "orebasis/order2.hpp"

#include <functional>
#include <vector>

namespace orebasis {

ExtendedNat v2p(const IntPoly& P, const Prime& p) {
  if (P.degree() > 1) throw PreconditionFailed("v2p: degree must be at most 1");
  ExtendedNat m = vp(P.coeff(1), p);
  ExtendedNat n = vp(P.coeff(0), p);
  ExtendedNat from_m = m.is_infinite() ? m : ExtendedNat(2 * m.value() + 1);
  ExtendedNat from_n = n.is_infinite() ? n : ExtendedNat(2 * n.value());
  return min(from_m, from_n);
}

SecondOrderContext make_second_order_context(const IntPoly& F, const Prime& p, const IntPoly& phi,
                                             std::string certified_by) {
  if (F.degree() != 4 || !F.is_monic()) throw HypothesisViolated("second order: F must be a monic quartic");
  if (phi.degree() != 2 || !phi.is_monic()) throw HypothesisViolated("second order: phi must be a monic quadratic");
  SecondOrderContext ctx{F, p, phi, {}, {}, std::move(certified_by)};
  Integer pz = p.as_integer();
  for (int i = 0; i < 4; ++i) {
    ctx.u[i] = vp(F.coeff(i), p);
    ctx.sigma[i] = ctx.u[i].is_infinite() ? Integer(0) : Integer(F.coeff(i) / p.power(ctx.u[i].value()));
  }
  if (ctx.u[0] != 2 || ctx.u[1] <= 1 || ctx.u[2] < 1 || ctx.u[3] < 1)
    throw HypothesisViolated("second order: need u0 = 2, u1 > 1, u2 >= 1, u3 >= 1");
  Integer c2 = ctx.u[2] == 1 ? mod(ctx.sigma[2], pz) : Integer(0);
  Integer c0 = mod(ctx.sigma[0], pz);
  Integer root;
  if (p.value() == 2) {
    if (c2 != 0) throw HypothesisViolated("second order: residual polynomial is separable");
    root = 1;
  } else {
    if (mod(c2 * c2 - 4 * c0, pz) != 0) throw HypothesisViolated("second order: residual polynomial is separable");
    root = mod(-c2 * inverse_mod(Integer(2), pz), pz);
  }
  if (mod(phi.coeff(1), pz) != 0 || mod(phi.coeff(0), pz) != 0)
    throw HypothesisViolated("second order: phi must be x^2 + zpx - yp");
  Integer y = -phi.coeff(0) / pz;
  if (mod(y - root, pz) != 0) throw HypothesisViolated("second order: phi does not lift the double residual root");
  return ctx;
}

SecondOrderPolygon second_order_polygon(const SecondOrderContext& ctx) {
  PhiExpansion e = phi_expand(ctx.F, ctx.phi);
  if (e.coefficients.size() != 3) throw Inconsistent("second order: unexpected phi-development length");
  SecondOrderPolygon P;
  ExtendedNat v0 = v2p(e.coefficients[0], ctx.p);
  ExtendedNat v1 = v2p(e.coefficients[1], ctx.p);
  if (v0.is_infinite()) throw HypothesisViolated("second order: phi divides F");
  P.points = {v0, v1 + ExtendedNat(2), ExtendedNat(4)};
  P.hull = newton_polygon({{0, P.points[0]}, {1, P.points[1]}, {2, P.points[2]}});
  P.Y = Rational(v0.value() + 4, 2);
  if (P.points[1].is_finite() && Rational(P.points[1].value()) < P.Y) P.Y = Rational(P.points[1].value());
  P.Y.canonicalize();
  P.Q = e.quotients[1];
  return P;
}

long ind2(const SecondOrderPolygon& polygon) { return floor(polygon.Y - 4).get_si(); }

long ind_p_order2(const SecondOrderPolygon& polygon) { return floor(polygon.Y).get_si() - 2; }

PIntegralBasis basis_order2(const SecondOrderContext& ctx) {
  if (ctx.certified_by.empty())
    throw NotSecondOrderRegular("second order: phi = " + ctx.phi.to_string() + " is not certified by any table row");
  SecondOrderPolygon P = second_order_polygon(ctx);
  Rational nu = P.Y / 2 - 1;
  long e1 = floor(nu).get_si();
  long e2 = floor(nu + Rational(1, 2)).get_si();
  IntPoly x{0, 1};
  std::vector<BasisElement> gens{{IntPoly{1}, 0},
                                 {x, 0},
                                 {P.Q, static_cast<unsigned long>(e1)},
                                 {x * P.Q, static_cast<unsigned long>(e2)}};
  PIntegralBasis B = triangularize(gens, 4, ctx.p);
  B.generators = gens;
  B.route = "order2";
  if (B.index_valuation != ind_p_order2(P))
    throw Inconsistent("second order: index " + std::to_string(B.index_valuation) + " differs from floor(Y) - 2");
  B.notes.push_back("phi = " + ctx.phi.to_string());
  B.notes.push_back("Y = " + P.Y.get_str());
  B.notes.push_back("certified by " + ctx.certified_by);
  return B;
}

namespace {

ExtendedNat v2(const Integer& n) { return vp(n, Prime(2)); }

// Odd part of n modulo 4 (n nonzero).
Integer unit_mod4(const Integer& n, const ExtendedNat& v) { return mod(n / ipow(2, v.value()), Integer(4)); }

Integer pow2(long w) { return ipow(Integer(2), static_cast<unsigned long>(w)); }

bool is_even(const ExtendedNat& v) { return v.is_finite() && v.value() % 2 == 0; }
bool is_odd(const ExtendedNat& v) { return v.is_finite() && v.value() % 2 == 1; }

// x^2 + c1 x + c0
IntPoly quad(const Integer& c1, const Integer& c0) { return IntPoly(std::vector<Integer>{c0, c1, 1}); }

struct Params {
  ExtendedNat v_first, v_second, v_third;  // table columns
  ExtendedNat u, v;
  Integer d, e, half;  // half = a/2 or -2 + A/2
  Integer quarter;     // a/4 or A/4 modulo 4
  long w = 0;
};

struct PhiRow {
  std::string label;
  std::function<bool(const Params&)> guard;
  std::function<IntPoly(const Params&)> phi;
};

PhiChoice pick(const std::vector<PhiRow>& rows, const Params& P, const std::string& table) {
  for (const auto& r : rows)
    if (r.guard(P)) return {r.phi(P), table + ":" + r.label};
  throw NoRow(table + ": no row matches");
}

long half_floor(const ExtendedNat& v) { return v.is_finite() ? v.value() / 2 : 0; }

// phi for x^4 + a x^2 + b x + c with v(a) > 1, v(b) > 1, v(c) = 2.
PhiChoice phi_e1_row6(const Integer& a, const Integer& b, const Integer& c) {
  Params P;
  P.v_first = v2(a);
  P.v_second = v2(b);
  P.v_third = v2(2 * a + c - 4);
  P.u = v2(b);
  Integer t = c - a * a / 4;
  P.v = v2(t);
  P.d = P.v.is_finite() ? unit_mod4(t, P.v) : Integer(0);
  P.half = a / 2;
  P.quarter = mod(a / 4, Integer(4));
  P.w = half_floor(P.v);
  using E = ExtendedNat;
  auto x2m2 = [](const Params&) { return quad(0, -2); };
  auto x2m2xm2 = [](const Params&) { return quad(-2, -2); };
  std::vector<PhiRow> rows{
      {"row1", [](const Params& q) { return q.v_second == E(2); }, x2m2},
      {"row2", [](const Params& q) { return q.v_second == E(3) && q.v_third == E(3); }, x2m2},
      {"row3", [](const Params& q) { return q.v_second == E(3) && q.v_third >= E(4); }, x2m2xm2},
      {"row4", [](const Params& q) { return q.v_first == E(2) && q.v_second >= E(4) && q.v_third >= E(4); },
       x2m2xm2},
      {"row5",
       [](const Params& q) { return q.v_first == E(2) && q.v_second >= E(4) && q.v_third == E(3) && q.u < q.v; },
       [](const Params& q) { return quad(0, q.half); }},
      {"row6",
       [](const Params& q) {
         return q.v_first == E(2) && q.v_second >= E(4) && q.v_third == E(3) && q.u == q.v && is_even(q.v);
       },
       [](const Params& q) { return quad(0, q.half + pow2(q.w)); }},
      {"row7",
       [](const Params& q) {
         return q.v_first == E(2) && q.v_second >= E(4) && q.v_third == E(3) && q.u == q.v && is_odd(q.v);
       },
       [](const Params& q) { return quad(pow2(q.w), q.half); }},
      {"row8",
       [](const Params& q) {
         return q.v_first == E(2) && q.v_second >= E(4) && q.v_third == E(3) && q.u > q.v && is_even(q.v) &&
                q.d == 3;
       },
       [](const Params& q) { return quad(0, q.half + pow2(q.w)); }},
      {"row9",
       [](const Params& q) {
         return q.v_first == E(2) && q.v_second >= E(4) && q.v_third == E(3) && q.u > q.v && is_even(q.v) &&
                q.d == 1;
       },
       [](const Params& q) { return quad(pow2(q.w), q.half + pow2(q.w)); }},
      {"row10",
       [](const Params& q) {
         return q.v_first == E(2) && q.v_second >= E(4) && q.v_third == E(3) && q.u > q.v && is_odd(q.v) &&
                q.d == q.quarter;
       },
       [](const Params& q) { return quad(pow2(q.w), q.half); }},
      {"row11",
       [](const Params& q) {
         return q.v_first == E(2) && q.v_second >= E(4) && q.v_third == E(3) && q.u > q.v && is_odd(q.v) &&
                q.d == mod(-q.quarter, Integer(4));
       },
       [](const Params& q) { return quad(pow2(q.w), q.half + pow2(q.w + 1)); }},
      {"row12", [](const Params& q) { return q.v_first >= E(3) && q.v_second >= E(4) && q.v_third == E(3); },
       x2m2},
      {"row13", [](const Params& q) { return q.v_first >= E(3) && q.v_second >= E(4) && q.v_third == E(4); },
       x2m2xm2},
      {"row14", [](const Params& q) { return q.v_first >= E(3) && q.v_second >= E(4) && q.v_third >= E(5); },
       [](const Params&) { return quad(-2, 2); }},
  };
  return pick(rows, P, "phi-e1-row6");
}

// phi for x^4 + 4x^3 + A x^2 + B x + C with v(A) > 1, v(B) > 1, v(C) = 2.
PhiChoice phi_e2_row4(const Integer& A, const Integer& B, const Integer& C) {
  Params P;
  P.v_first = v2(A);
  P.v_second = v2(B + 8);
  P.v_third = v2(2 * A + C + 4);
  Integer s = B + 8 - 2 * A;
  P.u = v2(s);
  Integer t = C - (A - 4) * (A - 4) / 4;
  P.v = v2(t);
  P.d = P.v.is_finite() ? unit_mod4(t, P.v) : Integer(0);
  P.e = P.u.is_finite() ? unit_mod4(s, P.u) : Integer(0);
  P.half = -2 + A / 2;
  P.quarter = mod(A / 4, Integer(4));
  P.w = half_floor(P.v);
  using E = ExtendedNat;
  auto x2m2 = [](const Params&) { return quad(0, -2); };
  auto x2p2xm2 = [](const Params&) { return quad(2, -2); };
  auto deep = [](const Params& q) { return q.v_first >= E(3) && q.v_second >= E(4) && q.v_third == E(3); };
  std::vector<PhiRow> rows{
      {"row1", [](const Params& q) { return q.v_second == E(2); }, x2m2},
      {"row2", [](const Params& q) { return q.v_second == E(3) && q.v_third >= E(4); }, x2m2},
      {"row3", [](const Params& q) { return q.v_first == E(2) && q.v_second >= E(3) && q.v_third == E(3); },
       x2p2xm2},
      {"row4", [](const Params& q) { return q.v_first == E(2) && q.v_second >= E(4) && q.v_third >= E(5); }, x2m2},
      {"row5", [](const Params& q) { return q.v_first == E(2) && q.v_second >= E(4) && q.v_third == E(4); },
       [](const Params&) { return quad(0, 2); }},
      {"row6", [](const Params& q) { return q.v_first >= E(3) && q.v_second == E(3) && q.v_third == E(3); },
       x2p2xm2},
      {"row7", [deep](const Params& q) { return deep(q) && q.u < q.v; },
       [](const Params& q) { return quad(2, q.half); }},
      {"row8", [deep](const Params& q) { return deep(q) && q.u == q.v && is_even(q.v); },
       [](const Params& q) { return quad(2, q.half + pow2(q.w)); }},
      {"row9",
       [deep](const Params& q) {
         return deep(q) && q.u == q.v && is_odd(q.v) && q.d == mod(1 + q.quarter, Integer(4));
       },
       [](const Params& q) { return quad(2 + pow2(q.w), q.half + pow2(q.w + 1)); }},
      {"row10",
       [deep](const Params& q) {
         return deep(q) && q.u == q.v && is_odd(q.v) && q.d == mod(-1 + q.quarter, Integer(4));
       },
       [](const Params& q) { return quad(2 + pow2(q.w), q.half); }},
      {"row11", [deep](const Params& q) { return deep(q) && q.u > q.v && is_even(q.v) && q.d == 3; },
       [](const Params& q) { return quad(2, q.half + pow2(q.w)); }},
      {"row12", [deep](const Params& q) { return deep(q) && q.u > q.v && is_even(q.v) && q.d == 1; },
       [](const Params& q) { return quad(2 + pow2(q.w), q.half + pow2(q.w)); }},
      {"row13", [deep](const Params& q) { return deep(q) && q.u > q.v && is_odd(q.v); },
       [](const Params& q) { return quad(2 + pow2(q.w), q.half); }},
      {"row14", [](const Params& q) { return q.v_first >= E(3) && q.v_second >= E(4) && q.v_third >= E(4); },
       x2m2},
  };
  return pick(rows, P, "phi-e2-row4");
}

// phi with h = x^4 + 2x^3 + A' x^2 + B' x + C' phi-regular, h = (x^2 + x + 1)^2 mod 2.
PhiChoice row10_phi(const Integer& A1, const Integer& B1, const Integer& C1) {
  Params P;
  P.u = v2(B1 + 1 - A1);
  Integer t = C1 - (A1 - 1) * (A1 - 1) / 4;
  P.v = v2(t);
  P.half = (A1 - 1) / 2;
  Integer a_mod4 = mod(A1, Integer(4));
  if (a_mod4 == 1) return {quad(1, -1), "phi-e2-row10:row1"};
  if (a_mod4 != 3) throw NoRow("phi-e2-row10: A' must be odd");
  ExtendedNat r = min(P.u, P.v);
  if (is_odd(r)) return {quad(1, P.half), "phi-e2-row10:row2"};
  if (P.u == P.v && is_even(P.u)) {
    long w = P.u.value() / 2;
    return {quad(1 + pow2(w), P.half), "phi-e2-row10:row3"};
  }
  if (is_even(P.u) && P.u < P.v) {
    long w = P.u.value() / 2;
    return {quad(1 + pow2(w), P.half + pow2(w)), "phi-e2-row10:row4"};
  }
  if (is_even(P.v) && P.u > P.v) {
    long w = P.v.value() / 2;
    return {quad(1, P.half + pow2(w)), "phi-e2-row10:row5"};
  }
  throw NoRow("phi-e2-row10: no row matches");
}

// x^2 + s with s = a/2 in Z_(p), approximated modulo a power of p deep enough
// that the phi-development keeps the second-order polygon of x^2 + a/2.
PhiChoice e1_row3_phi(const Integer& a, const Integer& b, const Integer& c, const Prime& p) {
  ExtendedNat m = min(vp(b, p), vp(a * a - 4 * c, p));
  if (m.is_infinite()) throw NoRow("E1 row 3: f is a square");
  Integer modulus = p.power(static_cast<unsigned long>(m.value() + 2));
  Integer s = mod(a * inverse_mod(Integer(2), modulus), modulus);
  return {quad(0, s), "phi-e1-row3"};
}

}  // namespace

PhiChoice choose_phi(Order2Case which, const Integer& a, const Integer& b, const Integer& c, const Prime& p) {
  switch (which) {
    case Order2Case::E1Row3:
      if (p.value() == 2) throw NoRow("E1 row 3 requires p > 2");
      return e1_row3_phi(a, b, c, p);
    case Order2Case::E1Row6:
      if (p.value() != 2) throw NoRow("E1 row 6 requires p = 2");
      return phi_e1_row6(a, b, c);
    case Order2Case::E2Row4:
      if (p.value() != 2) throw NoRow("E2 row 4 requires p = 2");
      return phi_e2_row4(a, b, c);
    case Order2Case::E2Row10:
      if (p.value() != 2) throw NoRow("E2 row 10 requires p = 2");
      return row10_phi(a, b, c);
    case Order2Case::E2Rows16_17:
      if (p.value() != 2) throw NoRow("E2 rows 16/17 require p = 2");
      return {quad(0, -2), "phi-e2-rows16-17"};
  }
  throw NoRow("unknown case");
}

}  // namespace orebasis
