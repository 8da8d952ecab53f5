#pragma once

#include <string>
#include <vector>

#include "verlinde/characters.hpp"

namespace verlinde {

enum class Morphism { naive, symmetric };

Morphism parse_morphism(const std::string& text);
std::string to_string(Morphism m);

/// Power h of the basic line bundle; all root-of-unity data lives at
/// modulus N = 2h + 4.
struct LevelData {
    int h = 0;
    explicit LevelData(int h_);
    int modulus() const { return 2 * h + 4; }
};

/// Shape of the deformation parameters t_1..t_r for a series type: one
/// parameter for CycSeries, two (outer t_1, inner t_2) for CycSeries2.
template <class S>
struct ParameterSpace;

template <>
struct ParameterSpace<CycSeries> {
    static constexpr int count = 1;
    static CycSeries constant(const CycScalar& c, const std::vector<int>& orders);
    static CycSeries parameter(int index, const std::vector<int>& orders);
};

template <>
struct ParameterSpace<CycSeries2> {
    static constexpr int count = 2;
    static CycSeries2 constant(const CycScalar& c, const std::vector<int>& orders);
    static CycSeries2 parameter(int index, const std::vector<int>& orders);
};

/// z_N^j, j = 1..h+1: one regular point per Weyl orbit, Im > 0.
std::vector<CycScalar> regular_points(const LevelData& level);

/// |Delta(f)|^2 / N.
CycScalar classical_theta(const CycScalar& f, const LevelData& level);

/// f evaluated at a series x with invertible constant term.
template <class S>
S eval_series(const RatLaurent& f, const S& x)
{
    S acc = like(x, Rational(0));
    if (f.is_zero())
        return acc;
    const S inv = x.inverse();
    for (const auto& [n, c] : f.terms())
        acc += scale(n >= 0 ? x.pow_int(n) : inv.pow_int(-n), c);
    return acc;
}

template <class S>
struct FrobeniusPoint {
    int j = 0;
    DeformedUnitPoint<S> point;
    S theta;
    /// Fixed-point equation evaluated at the solved point (identically zero).
    S residual;
};

template <class S>
struct FrobeniusData {
    LevelData level;
    Morphism morphism;
    std::vector<RatLaurent> flows;
    std::vector<int> orders;
    std::vector<FrobeniusPoint<S>> points;
};

namespace detail {

// log of the fixed-point map X(x) with X = x^N Phi(x): the deformation part
// log Phi(x) as a series.
template <class S>
S log_flow(Morphism m, const std::vector<RatLaurent>& flows, const S& x, const std::vector<int>& orders)
{
    using P = ParameterSpace<S>;
    S acc = like(x, Rational(0));
    for (size_t i = 0; i < flows.size(); ++i) {
        const S t = P::parameter(static_cast<int>(i), orders);
        if (m == Morphism::naive) {
            acc += t * eval_series(dot(flows[i]), x);
            continue;
        }
        // prod_n (1 - t x^n)^{-n f_n}
        const S one = like(x, Rational(1));
        const S inv = x.inverse();
        for (const auto& [n, c] : flows[i].terms()) {
            if (n == 0)
                continue;
            const S xn = n > 0 ? x.pow_int(n) : inv.pow_int(-n);
            acc += scale((one - t * xn).log(), Rational(-n) * c);
        }
    }
    return acc;
}

// u d/du log Phi(u) at x: the volume factor of the coordinate change.
template <class S>
S flow_slope(Morphism m, const std::vector<RatLaurent>& flows, const S& x, const std::vector<int>& orders)
{
    using P = ParameterSpace<S>;
    S acc = like(x, Rational(0));
    for (size_t i = 0; i < flows.size(); ++i) {
        const S t = P::parameter(static_cast<int>(i), orders);
        if (m == Morphism::naive) {
            acc += t * eval_series(ddot(flows[i]), x);
            continue;
        }
        const S one = like(x, Rational(1));
        const S inv = x.inverse();
        for (const auto& [n, c] : flows[i].terms()) {
            if (n == 0)
                continue;
            const S txn = t * (n > 0 ? x.pow_int(n) : inv.pow_int(-n));
            acc += scale(txn * (one - txn).inverse(), Rational(n) * Rational(n) * c);
        }
    }
    return acc;
}

} // namespace detail

/// Solves x^N Phi_t(x) = 1 from each regular point, Phi_t = exp(sum t_i f_i')
/// (naive) or prod_n (1 - t_i x^n)^{-n f_{i,n}} (symmetric), and records
/// theta = |Delta(x)|^2 / (N + u d/du log Phi_t).
template <class S>
FrobeniusData<S> deform_points(const LevelData& level, const std::vector<RatLaurent>& flows, Morphism morphism,
    const std::vector<int>& orders)
{
    using P = ParameterSpace<S>;
    if (static_cast<int>(flows.size()) > P::count)
        throw PreconditionError("more deformation flows than parameters");
    if (static_cast<int>(orders.size()) != P::count)
        throw PreconditionError("truncation orders do not match the parameter count");

    const int n = level.modulus();
    FrobeniusData<S> data{level, morphism, flows, orders, {}};
    const std::vector<CycScalar> roots = regular_points(level);
    for (size_t k = 0; k < roots.size(); ++k) {
        const CycScalar& zeta = roots[k];
        const S x0 = P::constant(zeta, orders);
        const S one = like(x0, Rational(1));
        const std::function<S(const S&)> f = [&](const S& x) {
            return x.pow_int(n) * detail::log_flow(morphism, flows, x, orders).exp() - one;
        };
        const std::function<S(const S&)> df = [&](const S& x) { return scale(x.pow_int(n - 1), CycScalar(n)); };
        const S x = newton_solve<S>(f, df, x0);
        const S eps = scale(x, zeta.inverse()).log();
        DeformedUnitPoint<S> point(zeta, eps);
        const S volume = like(x0, Rational(n)) + detail::flow_slope(morphism, flows, x, orders);
        S theta = weyl_denominator_sq(point) * volume.inverse();
        data.points.push_back({static_cast<int>(k) + 1, std::move(point), std::move(theta), f(x)});
    }
    return data;
}

/// Undeformed data (every theta constant).
template <class S>
FrobeniusData<S> classical_data(const LevelData& level, const std::vector<int>& orders)
{
    return deform_points<S>(level, {}, Morphism::naive, orders);
}

template <class S>
S deformed_theta(const FrobeniusData<S>& data, size_t index)
{
    return data.points.at(index).theta;
}

/// sum_f theta_f^{1-g}.
template <class S>
S partition_function(const FrobeniusData<S>& data, int genus)
{
    if (genus < 0)
        throw PreconditionError("genus must be non-negative");
    S acc = ParameterSpace<S>::constant(CycScalar(0), data.orders);
    for (const auto& p : data.points)
        acc += p.theta.pow_int(1 - genus);
    return acc;
}

/// sum_f ch_W(f_t) theta_f^{1-g}.
template <class S>
S trace_with_insertion(const FrobeniusData<S>& data, int genus, const RatLaurent& w)
{
    if (genus < 0)
        throw PreconditionError("genus must be non-negative");
    S acc = ParameterSpace<S>::constant(CycScalar(0), data.orders);
    for (const auto& p : data.points)
        acc += eval_at(w, p.point) * p.theta.pow_int(1 - genus);
    return acc;
}

/// Coefficients must be rational (imaginary parts cancel); ConsistencyError otherwise.
RatSeries rational_series(const CycSeries& s);
TSeries<RatSeries> rational_series(const CycSeries2& s);

} // namespace verlinde
