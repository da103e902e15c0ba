#pragma once

#include "orebasis/int_poly.hpp"

namespace orebasis {

/// Remainder of lc(B)^(deg A - deg B + 1) * A by B in Z[x].
IntPoly pseudo_remainder(const IntPoly& A, const IntPoly& B);

/// Res(P, Q) = lc(P)^deg(Q) * prod Q(alpha) over the roots alpha of P,
/// computed with the subresultant algorithm.
Integer resultant(const IntPoly& P, const IntPoly& Q);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f).
Integer discriminant(const IntPoly& f);

}  // namespace orebasis
