#pragma once

// Uniform vocabulary over the scalar tower used by the series and character
// templates: Rational, CycScalar, and TSeries over either (nested for several
// deformation parameters).

#include "verlinde/cyclotomic.hpp"
#include "verlinde/rational.hpp"

namespace verlinde {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const CycScalar& x) { return x.is_zero(); }

inline Rational unit_inverse(const Rational& q)
{
    if (sgn(q) == 0)
        throw DivisionByZero("inverse of rational zero");
    return 1 / q;
}
inline CycScalar unit_inverse(const CycScalar& x) { return x.inverse(); }

/// exp of a base scalar is only defined at zero: deformed points are always
/// written as z * exp(eps) with eps vanishing at the origin.
inline Rational exp_constant(const Rational& q)
{
    if (sgn(q) != 0)
        throw PreconditionError("exp of a series with nonzero constant term");
    return 1;
}
inline CycScalar exp_constant(const CycScalar& x)
{
    if (!x.is_zero())
        throw PreconditionError("exp of a series with nonzero constant term");
    return CycScalar(1);
}
inline Rational log_constant(const Rational& q)
{
    if (q != 1)
        throw PreconditionError("log of a series whose constant term is not 1");
    return 0;
}
inline CycScalar log_constant(const CycScalar& x)
{
    if (!(x == CycScalar(1)))
        throw PreconditionError("log of a series whose constant term is not 1");
    return CycScalar(0);
}

/// Constant of the same shape as `proto` (same conductor tower / orders).
inline Rational like(const Rational&, const Rational& q) { return q; }
inline CycScalar like(const CycScalar&, const Rational& q) { return CycScalar(q); }
inline CycScalar like(const CycScalar&, const CycScalar& c) { return c; }

/// Value with every deformation parameter set to zero.
inline CycScalar scalar_part(const CycScalar& x) { return x; }
inline CycScalar scalar_part(const Rational& q) { return CycScalar(q); }

/// Sum of truncation orders of all nested parameters (0 for base scalars).
inline int total_order(const Rational&) { return 0; }
inline int total_order(const CycScalar&) { return 0; }

} // namespace verlinde
