#pragma once

#include <array>
#include <string>
#include <vector>

#include "orebasis/ore.hpp"

namespace orebasis {

enum class QuarticCase { Separable, A1, A2, B1, B2, B3, B4, C1, C2, D1, D2, E1, E2 };

std::string to_string(QuarticCase c);

/// x^4 + a x^2 + b x + c at the prime p.
struct QuarticContext {
  Integer a, b, c;
  Prime p;
  Integer disc;
  long Delta = 0;

  IntPoly f() const;
};

QuarticContext make_quartic_context(const Integer& a, const Integer& b, const Integer& c, const Prime& p);

/// 16a^4c - 128a^2c^2 + 144ab^2c - 4a^3b^2 + 256c^3 - 27b^4
Integer quartic_discriminant(const Integer& a, const Integer& b, const Integer& c);

/// Type of the factorization of x^4 + a x^2 + b x + c modulo p. Throws
/// Inconsistent unless exactly one case applies.
QuarticCase classify(const Integer& a, const Integer& b, const Integer& c, const Prime& p);

/// Valuations and p-free parts of F(s), F'(s), F''(s)/2, F'''(s)/6.
struct ValuationProfile {
  std::array<ExtendedNat, 4> u;
  std::array<Integer, 4> sigma;
};

ValuationProfile valuation_profile(const IntPoly& F, const Integer& s, const Prime& p);

enum class InitialCondition { I, II, III, None };

std::string to_string(InitialCondition c);

InitialCondition check_initial_conditions(const ValuationProfile& profile, const Prime& p);

/// Row of the table of irregular integers matching the profile, 0 if none.
int irregular_row(const ValuationProfile& profile, const Prime& p);

struct IterationStep {
  Integer s;
  /// Row of the table of irregular integers, 0 when no row describes s.
  int row = 0;
  long delta = 0;
  Integer y;
  long index = 0;
};

struct IterationResult {
  Integer s;
  /// One entry per irregular integer met, in order.
  std::vector<IterationStep> steps;
  InitialCondition condition = InitialCondition::None;
  /// ind_{x - s} of the final regular s.
  long index = 0;
};

/// Replaces s by s + y p^delta until F is (x - s)-regular. Throws
/// PreconditionFailed if s0 meets no initial condition, NonIntegerSlope if an
/// irregular side has a non-integral slope, and Inconsistent if the index
/// fails to grow or the number of steps exceeds v_p(disc F)/2 + 1.
IterationResult iterate_to_regular(const IntPoly& F, const Integer& s0, const Prime& p);

/// Repeated substitution x -> x/p while v(a) >= 2, v(b) >= 3, v(c) >= 4.
struct E1Reduction {
  Integer a, b, c;
  unsigned long steps = 0;
};

E1Reduction reduce_E1(const Integer& a, const Integer& b, const Integer& c, const Prime& p);

PIntegralBasis basis_case_A(const QuarticContext& ctx);
PIntegralBasis basis_case_B(const QuarticContext& ctx);
PIntegralBasis basis_case_C(const QuarticContext& ctx);
PIntegralBasis basis_case_D(const QuarticContext& ctx);
/// Expects a context already reduced by reduce_E1.
PIntegralBasis basis_case_E1(const QuarticContext& ctx);
PIntegralBasis basis_case_E2(const QuarticContext& ctx);

/// Throws NotIrreducible for reducible input.
PIntegralBasis quartic_p_integral_basis(const Integer& a, const Integer& b, const Integer& c, const Prime& p);

/// Basis read from the (Q, nu) expansion tables for the cases that the main
/// route handles with second-order polygons or with a regular phi: E1 row 6,
/// E2 row 4 and E2 row 10. The route names the table row. Throws NoRow if
/// the input is in none of these cases.
PIntegralBasis quartic_table_basis(const Integer& a, const Integer& b, const Integer& c, const Prime& p);

}  // namespace orebasis
