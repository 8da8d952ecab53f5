#pragma once

#include <string>
#include <type_traits>

#include "verlinde/laurent.hpp"

namespace verlinde {

/// Irreducible SU(2) representation of highest weight n (dimension n + 1).
struct SU2Rep {
    int highest_weight = 0;
};

/// sum_{j=0..n} u^{n-2j}.
RatLaurent su2_character(SU2Rep rep);

/// Character given on the command line: "su2:n" or "laurent:{e:c,...}".
RatLaurent parse_character(const std::string& text);

/// z * exp(eps(t)) with z a root of unity and eps vanishing at t = 0.
template <class S>
class DeformedUnitPoint {
public:
    DeformedUnitPoint(CycScalar base, S correction)
        : base_(std::move(base)), correction_(std::move(correction)), growth_(correction_.exp())
    {
        if (!scalar_part(correction_).is_zero())
            throw PreconditionError("deformation of a unit point must vanish at t = 0");
        if (base_.is_zero())
            throw SingularPoint("deformed point based at zero");
        shrink_ = growth_.inverse();
    }

    const CycScalar& base() const { return base_; }
    const S& correction() const { return correction_; }

    /// The point raised to the n-th power, z^n exp(n eps), as a series.
    S pow(long n) const
    {
        const S& unit = n >= 0 ? growth_ : shrink_;
        return scale(unit.pow_int(n >= 0 ? n : -n), base_.pow(n));
    }
    S value() const { return pow(1); }

private:
    CycScalar base_;
    S correction_;
    S growth_;
    S shrink_;
};

inline CycScalar eval_at(const RatLaurent& f, const CycScalar& u)
{
    if (u.is_zero())
        throw SingularPoint("Laurent polynomial evaluated at u = 0");
    CycScalar acc;
    for (const auto& [n, c] : f.terms())
        acc += CycScalar(c) * u.pow(n);
    return acc;
}

/// Substitution u = z exp(eps(t)); coefficients may be rational or series of
/// the same shape as the point.
template <class R, class S>
S eval_at(const LaurentPoly<R>& f, const DeformedUnitPoint<S>& p)
{
    S acc = like(p.correction(), Rational(0));
    for (const auto& [n, c] : f.terms()) {
        if constexpr (std::is_same_v<R, S>)
            acc += c * p.pow(n);
        else
            acc += scale(p.pow(n), c);
    }
    return acc;
}

/// 2 - u^2 - u^{-2}, i.e. |Delta(u)|^2 on the unit circle.
inline CycScalar weyl_denominator_sq(const CycScalar& u)
{
    if (u.is_zero())
        throw SingularPoint("Weyl denominator at u = 0");
    return CycScalar(2) - u * u - (u * u).inverse();
}

template <class S>
S weyl_denominator_sq(const DeformedUnitPoint<S>& p)
{
    return like(p.correction(), Rational(2)) - p.pow(2) - p.pow(-2);
}

} // namespace verlinde
