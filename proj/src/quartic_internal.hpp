#pragma once

#include <array>
#include <string>
#include <vector>

#include "orebasis/quartic.hpp"

namespace orebasis::detail {

/// P(tau)/p^e with tau = (theta - m)/p^k, rewritten as N(theta)/p^(e + k deg P).
BasisElement to_theta(const BasisElement& element, const Integer& m, unsigned long k, const Prime& p);

std::vector<BasisElement> to_theta(const std::vector<BasisElement>& elements, const Integer& m, unsigned long k,
                                   const Prime& p);

/// x^i / p^exps[i]
std::vector<BasisElement> scaled_powers(const std::array<unsigned long, 4>& exps);

/// Triangularized basis with generators, route and notes attached.
PIntegralBasis finish(const std::vector<BasisElement>& generators, const Prime& p, std::string route,
                      std::vector<std::string> notes = {});

/// (F(x) - F(s)) / (x - s)
IntPoly first_quotient(const IntPoly& F, const Integer& s);

/// Quotient of the first quotient by x - s.
IntPoly second_quotient(const IntPoly& F, const Integer& s);

bool is_regular_at(const IntPoly& F, const Integer& s, const Prime& p);

/// floor(min{v(F(s))/2, v(F'(s))}): ordinate at abscissa one of a length-two polygon.
long nu_length_two(const IntPoly& F, const Integer& s, const Prime& p);

std::string iteration_note(const IterationResult& r);

}  // namespace orebasis::detail
