#pragma once

#include "hyperform/mpoly.hpp"

namespace hyperform {

/// Pseudo-remainder of a by b with respect to v: returns r with
/// lc_v(b)^k * a = q*b + r, deg_v(r) < deg_v(b); k is written to kout.
MPoly pseudo_rem(const MPoly& a, const MPoly& b, Var v, int* kout = nullptr);

/// Resultant with respect to v, eliminating v, computed by the
/// subresultant polynomial remainder sequence. For b constant in v this
/// is b^deg_v(a) (and symmetrically); for two v-constants it is 1.
MPoly resultant(const MPoly& a, const MPoly& b, Var v);

/// Multivariate gcd (content/primitive-part recursion on the variable of
/// lowest degree), normalized: integer-primitive with positive leading
/// coefficient over Q, monic over an extension.
MPoly mgcd(const MPoly& a, const MPoly& b);

/// Squarefree part of a univariate polynomial over its coefficient field:
/// p / gcd(p, p'), normalized.
MPoly squarefree_part(const MPoly& p, Var v);

/// Remainder of p modulo f with respect to y after clearing denominators:
/// lc_y(f)^k * p = q*f + r with deg_y(r) < deg_y(f). Returns r (and k).
MPoly reduce_mod_curve(const MPoly& p, const MPoly& f, int* kout = nullptr);

/// Content of p with respect to v: gcd of the UPoly coefficients.
MPoly content_wrt(const MPoly& p, Var v);
MPoly primitive_part_wrt(const MPoly& p, Var v);

} // namespace hyperform
