#pragma once

#include <array>
#include <string>

#include "orebasis/newton.hpp"
#include "orebasis/ore.hpp"

namespace orebasis {

/// Second-order valuation of m x + n: min{2 v_p(m) + 1, 2 v_p(n)}.
ExtendedNat v2p(const IntPoly& P, const Prime& p);

/// A monic quartic F with u_0 = 2, u_1 > 1, u_2 >= 1, u_3 >= 1 and an
/// inseparable residual polynomial on its x-polygon, together with a lift
/// phi = x^2 + z p x - y p of the double residual root.
struct SecondOrderContext {
  IntPoly F;
  Prime p;
  IntPoly phi;
  std::array<ExtendedNat, 4> u;
  std::array<Integer, 4> sigma;
  /// Table row that certifies second-order regularity for phi; empty if none.
  std::string certified_by;
};

/// Checks the hypothesis block; throws HypothesisViolated.
SecondOrderContext make_second_order_context(const IntPoly& F, const Prime& p, const IntPoly& phi,
                                             std::string certified_by = {});

struct SecondOrderPolygon {
  /// Ordinates of the points (i, v2(a_i phi^i)), i = 0, 1, 2.
  std::array<ExtendedNat, 3> points;
  NewtonPolygon hull;
  /// Ordinate of the hull at abscissa 1.
  Rational Y;
  /// First quotient phi + a_1 of the phi-development.
  IntPoly Q;
};

SecondOrderPolygon second_order_polygon(const SecondOrderContext& ctx);

/// floor(Y - 4)
long ind2(const SecondOrderPolygon& polygon);

/// floor(Y) - 2
long ind_p_order2(const SecondOrderPolygon& polygon);

/// 1, theta, Q(theta)/p^floor(nu), theta Q(theta)/p^floor(nu + 1/2) with nu = Y/2 - 1.
/// Throws NotSecondOrderRegular unless ctx.certified_by names a table row.
PIntegralBasis basis_order2(const SecondOrderContext& ctx);

enum class Order2Case { E1Row3, E1Row6, E2Row4, E2Row10, E2Rows16_17 };

struct PhiChoice {
  IntPoly phi;
  std::string row;
};

/// The tabulated phi for the given case. The coefficients are those of the
/// polynomial the case refers to: (a, b, c) of x^4 + a x^2 + b x + c for the
/// E1 cases, (A, B, C) of x^4 + 4x^3 + A x^2 + B x + C for E2Row4 and
/// (A', B', C') of x^4 + 2x^3 + A' x^2 + B' x + C' for E2Row10. E2Rows16_17
/// ignores them. Throws NoRow when no row matches.
PhiChoice choose_phi(Order2Case which, const Integer& a, const Integer& b, const Integer& c, const Prime& p);

}  // namespace orebasis
