#pragma once

#include <vector>

#include "orebasis/int_poly.hpp"
#include "orebasis/ore.hpp"

namespace orebasis::oracle {

/// Characteristic polynomial of g(theta) for theta a root of the monic f,
/// coefficients indexed by degree (monic of degree deg f).
std::vector<Integer> char_poly(const IntPoly& f, const IntPoly& g);

/// Res_x(f(x), p^e y - g(x)) as a polynomial in y, by evaluation at
/// deg f + 1 points and interpolation.
std::vector<Integer> resolvent(const IntPoly& f, const IntPoly& g, const Integer& scale);

/// Whether numerator(theta)/p^e is an algebraic integer.
bool is_integral(const IntPoly& f, const BasisElement& element, const Prime& p);

struct SaturationStats {
  long rounds = 0;
  long integrality_tests = 0;
};

/// p-maximal order by exhaustive search for integral (sum c_i w_i)/p.
PIntegralBasis saturate(const IntPoly& f, const Prime& p, SaturationStats* stats = nullptr);

/// Saturation starting from a given order instead of the power basis.
PIntegralBasis saturate_from(const IntPoly& f, const Prime& p, PIntegralBasis start,
                             SaturationStats* stats = nullptr);

struct DiscCheck {
  bool holds = false;
  Integer disc_f;
  Rational disc_basis;
  long vp_disc_f = 0;
  long vp_disc_basis = 0;
  long index_valuation = 0;
};

/// v_p(disc f) = 2 ind + v_p(disc basis), with disc f from Res(f, f') and the
/// basis discriminant from the trace form.
DiscCheck disc_identity_check(const IntPoly& f, const Prime& p, const PIntegralBasis& basis);

/// Determinant of the trace form on the basis.
Rational basis_discriminant(const IntPoly& f, const Prime& p, const std::vector<BasisElement>& basis);

/// Products of basis elements have p-integral coordinates in the basis.
bool is_ring_closed(const IntPoly& f, const PIntegralBasis& basis, const Prime& p);

/// Mutual containment of the two Z_(p)-modules, checked by back substitution.
bool same_module(const PIntegralBasis& a, const PIntegralBasis& b, int n, const Prime& p);

}  // namespace orebasis::oracle
