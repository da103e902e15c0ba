#pragma once

#include <vector>

#include "orebasis/int_poly.hpp"

namespace orebasis {

/// Positive divisors of n != 0, increasing.
std::vector<Integer> divisors(const Integer& n);

/// Integer roots of a monic polynomial (rational roots of a monic are integral).
std::vector<Integer> integer_roots(const IntPoly& f);

/// Irreducibility of x^4 + a x^2 + b x + c over Q: no integer root and no
/// factorization (x^2 + u x + v)(x^2 - u x + w) over Z.
bool quartic_is_irreducible(const Integer& a, const Integer& b, const Integer& c);

/// Sufficient test: f is irreducible modulo some prime below the bound.
bool irreducible_mod_some_prime(const IntPoly& f, unsigned long prime_bound = 200);

}  // namespace orebasis
