#include "verlinde/frobenius.hpp"

namespace verlinde {

Morphism parse_morphism(const std::string& text)
{
    if (text == "naive")
        return Morphism::naive;
    if (text == "symmetric")
        return Morphism::symmetric;
    throw PreconditionError("unknown morphism '" + text + "' (expected naive or symmetric)");
}

std::string to_string(Morphism m) { return m == Morphism::naive ? "naive" : "symmetric"; }

LevelData::LevelData(int h_) : h(h_)
{
    if (h_ < 0)
        throw PreconditionError("level h must be non-negative");
}

CycSeries ParameterSpace<CycSeries>::constant(const CycScalar& c, const std::vector<int>& orders)
{
    return CycSeries::constant(c, orders.at(0));
}

CycSeries ParameterSpace<CycSeries>::parameter(int index, const std::vector<int>& orders)
{
    if (index != 0)
        throw PreconditionError("single-parameter series has no parameter " + std::to_string(index + 1));
    return CycSeries::variable(orders.at(0));
}

CycSeries2 ParameterSpace<CycSeries2>::constant(const CycScalar& c, const std::vector<int>& orders)
{
    return CycSeries2::constant(CycSeries::constant(c, orders.at(1)), orders.at(0));
}

CycSeries2 ParameterSpace<CycSeries2>::parameter(int index, const std::vector<int>& orders)
{
    if (index == 0)
        return CycSeries2::variable(orders.at(0), CycSeries::constant(0, orders.at(1)));
    if (index == 1)
        return CycSeries2::constant(CycSeries::variable(orders.at(1)), orders.at(0));
    throw PreconditionError("two-parameter series has no parameter " + std::to_string(index + 1));
}

std::vector<CycScalar> regular_points(const LevelData& level)
{
    std::vector<CycScalar> pts;
    for (int j = 1; j <= level.h + 1; ++j)
        pts.push_back(CycScalar::root_of_unity(level.modulus(), j));
    return pts;
}

CycScalar classical_theta(const CycScalar& f, const LevelData& level)
{
    const CycScalar w = weyl_denominator_sq(f);
    if (w.is_zero())
        throw SingularPoint("theta at a singular point (u = +-1)");
    return w / CycScalar(level.modulus());
}

RatSeries rational_series(const CycSeries& s)
{
    RatSeries r(s.order());
    for (int k = 0; k <= s.order(); ++k) {
        if (!s[k].is_rational())
            throw ConsistencyError("series coefficient t^" + std::to_string(k) + " is not rational: " + s[k].to_string());
        r[k] = s[k].rational_value();
    }
    return r;
}

TSeries<RatSeries> rational_series(const CycSeries2& s)
{
    TSeries<RatSeries> r(s.order(), RatSeries(s[0].order()));
    for (int k = 0; k <= s.order(); ++k)
        r[k] = rational_series(s[k]);
    return r;
}

} // namespace verlinde
