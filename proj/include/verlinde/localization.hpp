#pragma once

// Localization route: Jacobian integrals of ch(E) D^h / Euler(nu^*), summed
// over degrees into a distribution on the circle and paired against the
// Weyl-corrected test function.

#include <string>
#include <vector>

#include "verlinde/cohomology.hpp"
#include "verlinde/frobenius.hpp"

namespace verlinde {

/// Sign of t relating the index-bundle insertion exp[t alpha(V)] to the
/// Frobenius-side flow x^N exp(t f'(x)) = 1; pinned by route agreement at
/// even highest weight, where the two orientations differ.
inline constexpr int kIndexFlowSign = -1;

struct ExponentialInsertion {
    RatLaurent character;
    int parameter = 0;
};

/// D^h * prod exp[t_i alpha(V_i)] * prod E_x^* W_j.
struct AdmissibleClass {
    int h = 0;
    std::vector<ExponentialInsertion> exponentials;
    std::vector<RatLaurent> evaluations;
};

/// t-free output of the cohomology engine after the change of variables
/// u -> u e^{-eta}. Laurent data are the eta^k coefficients.
struct IntegrandPieces {
    int genus = 0;
    int modulus = 0;
    /// Prefactor sign * (u - u^-1)^{-weyl_power} of the inverse Euler class.
    int euler_sign = 1;
    int weyl_power = 0;
    /// D^h prod E_x^* W / (Euler without its Weyl factor) = u^{-N d} sum_k core[k] eta^k.
    std::vector<RatLaurent> core;
    struct Flow {
        int parameter = 0;
        /// ch alpha(V) = d * rate + sum_k eta_part[k] eta^k.
        RatLaurent rate;
        std::vector<RatLaurent> eta_part;
    };
    std::vector<Flow> flows;
};

IntegrandPieces assemble_symbolic(const AdmissibleClass& e, int genus);

/// sum_d X(u)^d (sum_m d^m Q_m(u)) A(u) with X = u^N exp(B), before the Weyl
/// prefactor.
template <class S>
struct DSumIntegrand {
    int genus = 0;
    int modulus = 0;
    std::vector<int> orders;
    LaurentPoly<S> base;
    LaurentPoly<S> rate;
    std::vector<LaurentPoly<S>> d_powers;
    int euler_sign = 1;
    int weyl_power = 0;
};

/// sum over atoms of sum_k c_k delta^{(k)}_{point}, where
/// <delta^{(k)}_z, phi> = (u d/du)^k phi (z) and <delta_z, phi> = phi(z) against
/// du / (2 pi i u).
template <class S>
struct CircleDistribution {
    int d_power = 0;
    struct Atom {
        int root_index = 0;
        DeformedUnitPoint<S> point;
        std::vector<S> coefficients;
        /// N eps + B(u) at the support point (identically zero).
        S residual;
    };
    std::vector<Atom> atoms;
};

/// numerator / |Delta(u)|^{2 delta_power}.
template <class S>
struct TestFunction {
    LaurentPoly<S> numerator;
    int delta_power = 0;
};

struct RouteBOptions {
    /// Drop u = +-1 from the support (the distribution is null there).
    bool exclude_singular = true;
    int flow_sign = kIndexFlowSign;
};

namespace detail {

template <class S>
LaurentPoly<S> lift_laurent(const RatLaurent& f, const std::vector<int>& orders)
{
    return f.map_coefficients([&](const Rational& c) { return ParameterSpace<S>::constant(CycScalar(c), orders); });
}

template <class S>
LaurentPoly<TSeries<S>> lift_outer(const LaurentPoly<S>& f, int order)
{
    return f.map_coefficients([&](const S& c) { return TSeries<S>::constant(c, order); });
}

// eta-polynomials truncated at eta^g.
template <class S>
using EtaPoly = std::vector<LaurentPoly<S>>;

template <class S>
EtaPoly<S> eta_mul(const EtaPoly<S>& a, const EtaPoly<S>& b)
{
    EtaPoly<S> r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; i + j < a.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

// exp of an eta-polynomial with vanishing eta^0 part.
template <class S>
EtaPoly<S> eta_exp(const EtaPoly<S>& y, const S& one)
{
    if (!y[0].is_zero())
        throw PreconditionError("exponential insertion with an eta-free, d-free part is not a Laurent polynomial");
    EtaPoly<S> result(y.size()), term(y.size());
    result[0] = LaurentPoly<S>(one);
    term[0] = LaurentPoly<S>(one);
    for (size_t k = 1; k < y.size(); ++k) {
        term = eta_mul(term, y);
        for (auto& t : term)
            t = t.map_coefficients([&](const S& c) { return scale(c, Rational(1, static_cast<long>(k))); });
        for (size_t i = 0; i < y.size(); ++i)
            result[i] += term[i];
    }
    return result;
}

} // namespace detail

/// Integrates the Jacobian with series coefficients: int e^{c eta} = c^g.
template <class S>
DSumIntegrand<S> assemble_integrand(const IntegrandPieces& pieces, const std::vector<int>& orders,
    int flow_sign = kIndexFlowSign)
{
    using P = ParameterSpace<S>;
    const int g = pieces.genus;
    const S one = P::constant(CycScalar(1), orders);

    detail::EtaPoly<S> integrand(static_cast<size_t>(g) + 1);
    for (size_t k = 0; k < pieces.core.size() && k <= static_cast<size_t>(g); ++k)
        integrand[k] = detail::lift_laurent<S>(pieces.core[k], orders);

    DSumIntegrand<S> out;
    out.genus = g;
    out.modulus = pieces.modulus;
    out.orders = orders;
    out.euler_sign = pieces.euler_sign;
    out.weyl_power = pieces.weyl_power;

    detail::EtaPoly<S> exponent(static_cast<size_t>(g) + 1);
    for (const auto& flow : pieces.flows) {
        const S t = scale(P::parameter(flow.parameter, orders), Rational(flow_sign));
        for (size_t k = 0; k < flow.eta_part.size() && k <= static_cast<size_t>(g); ++k)
            exponent[k] += detail::lift_laurent<S>(flow.eta_part[k], orders) * LaurentPoly<S>(t);
        // exp(sign t d rate) u^{-N d}, relabelled d -> -d: X = u^N exp(-sign t rate).
        out.rate -= detail::lift_laurent<S>(flow.rate, orders) * LaurentPoly<S>(t);
    }
    integrand = detail::eta_mul(integrand, detail::eta_exp(exponent, one));

    Rational g_fact = Rational(factorial(static_cast<unsigned>(g)));
    out.base = integrand[static_cast<size_t>(g)].map_coefficients([&](const S& c) { return scale(c, g_fact); });
    out.d_powers = {LaurentPoly<S>(one)};
    return out;
}

/// Roots z_N^k of the support: all k except 0 and N/2 unless exclusion is off.
std::vector<int> support_root_indices(int modulus, bool exclude_singular);

/// The distributions sum_d d^m X(u)^d, m = 0..(number of d-powers - 1).
/// Support points solve X(u) e^s = 1 by fixed-point iteration on
/// N eps = -B(z e^eps) - s, s an auxiliary parameter whose m-th derivative
/// produces the factor d^m.
template <class S>
std::vector<CircleDistribution<S>> d_sum(const DSumIntegrand<S>& in, bool exclude_singular = true)
{
    using T = TSeries<S>;
    using P = ParameterSpace<S>;
    const int n = in.modulus;
    const int max_m = static_cast<int>(in.d_powers.size()) - 1;
    const S zero = P::constant(CycScalar(0), in.orders);
    const T s = T::variable(max_m, zero);
    const LaurentPoly<T> rate = detail::lift_outer(in.rate, max_m);
    const LaurentPoly<T> rate_slope = detail::lift_outer(dot(in.rate), max_m);
    const CycScalar inv_n = CycScalar(make_rational(1, n));

    for (const auto& [e, c] : in.rate.terms())
        if (!scalar_part(c).is_zero())
            throw PreconditionError("exponential rate must vanish at t = 0");

    std::vector<CircleDistribution<S>> out(static_cast<size_t>(max_m) + 1);
    for (int m = 0; m <= max_m; ++m)
        out[m].d_power = m;

    for (int k : support_root_indices(n, exclude_singular)) {
        const CycScalar zeta = CycScalar::root_of_unity(n, k);
        T eps = T::constant(zero, max_m);
        auto residual = [&](const T& e) {
            const DeformedUnitPoint<T> p(zeta, e);
            return scale(e, CycScalar(n)) + eval_at(rate, p) + s;
        };
        const int sweeps = total_order(eps) + 2;
        for (int i = 0; i < sweeps; ++i)
            eps = -scale(eval_at(rate, DeformedUnitPoint<T>(zeta, eps)) + s, inv_n);
        const T res = residual(eps);
        if (!res.is_zero())
            throw ConsistencyError("support point of the degree sum did not converge");

        const DeformedUnitPoint<T> moving(zeta, eps);
        const T jac = like(eps, Rational(n)) + eval_at(rate_slope, moving);
        const T jac_inv = jac.inverse();
        T shift = eps;
        shift[0] = zero;
        const DeformedUnitPoint<S> point(zeta, eps[0]);
        for (int m = 0; m <= max_m; ++m) {
            std::vector<S> coeffs;
            T shift_pow = T::constant(P::constant(CycScalar(1), in.orders), max_m);
            Rational k_fact = 1;
            for (int kk = 0; kk <= m; ++kk) {
                if (kk > 0) {
                    shift_pow = shift_pow * shift;
                    k_fact *= kk;
                }
                const T term = shift_pow * jac_inv;
                coeffs.push_back(scale(term[m], Rational(factorial(static_cast<unsigned>(m))) / k_fact));
            }
            out[m].atoms.push_back({k, point, std::move(coeffs), res[0]});
        }
    }
    return out;
}

/// Evaluates the test function at z e^{x} as a series in x: D^k phi(z) = k! [x^k].
template <class S>
TSeries<S> test_jet(const TestFunction<S>& phi, const DeformedUnitPoint<S>& point, int order)
{
    using T = TSeries<S>;
    const S zero = like(point.correction(), Rational(0));
    T corr = T::constant(point.correction(), order) + T::variable(order, zero);
    const DeformedUnitPoint<T> p(point.base(), corr);
    const T num = eval_at(detail::lift_outer(phi.numerator, order), p);
    const T delta = weyl_denominator_sq(p);
    if (phi.delta_power == 0)
        return num;
    if (phi.delta_power > 0 && scalar_part(delta).is_zero())
        throw SingularPoint("test function singular at a support point");
    return num * delta.pow_int(-phi.delta_power);
}

/// (1/2) sum over atoms of sum_k c_k (D^k phi)(point).
template <class S>
S pair(const CircleDistribution<S>& dist, const TestFunction<S>& phi, const std::vector<int>& orders)
{
    S acc = ParameterSpace<S>::constant(CycScalar(0), orders);
    for (const auto& atom : dist.atoms) {
        const int kmax = static_cast<int>(atom.coefficients.size()) - 1;
        const TSeries<S> jet = test_jet(phi, atom.point, kmax);
        Rational k_fact = 1;
        for (int k = 0; k <= kmax; ++k) {
            if (k > 0)
                k_fact *= k;
            acc += atom.coefficients[k] * scale(jet[k], k_fact);
        }
    }
    return scale(acc, make_rational(1, 2));
}

/// Test function for the m-th d-power: euler_sign (u - u^-1)^{-p} A Q_m, with
/// (u - u^-1)^2 = -|Delta|^2.
template <class S>
TestFunction<S> weyl_test_function(const DSumIntegrand<S>& in, int m)
{
    if (in.weyl_power % 2 != 0)
        throw ConsistencyError("odd Weyl power");
    const int half = in.weyl_power / 2;
    const int sign = in.euler_sign * (half % 2 == 0 ? 1 : -1);
    TestFunction<S> phi;
    phi.numerator = (in.base * in.d_powers.at(static_cast<size_t>(m)))
                        .map_coefficients([&](const S& c) { return scale(c, Rational(sign)); });
    phi.delta_power = half;
    return phi;
}

template <class S>
S route_b_index(const AdmissibleClass& e, int genus, const std::vector<int>& orders, const RouteBOptions& opts = {})
{
    const IntegrandPieces pieces = assemble_symbolic(e, genus);
    const DSumIntegrand<S> in = assemble_integrand<S>(pieces, orders, opts.flow_sign);
    const auto dists = d_sum(in, opts.exclude_singular);
    S acc = ParameterSpace<S>::constant(CycScalar(0), orders);
    for (size_t m = 0; m < dists.size(); ++m)
        acc += pair(dists[m], weyl_test_function(in, static_cast<int>(m)), orders);
    return acc;
}

template <class S>
struct SupportContribution {
    int root_index = 0;
    CycScalar base;
    S value;
};

/// route_b_index split by support root (summed over the d-powers); the values
/// add up to the index.
template <class S>
std::vector<SupportContribution<S>> route_b_contributions(
    const AdmissibleClass& e, int genus, const std::vector<int>& orders, const RouteBOptions& opts = {})
{
    const IntegrandPieces pieces = assemble_symbolic(e, genus);
    const DSumIntegrand<S> in = assemble_integrand<S>(pieces, orders, opts.flow_sign);
    const auto dists = d_sum(in, opts.exclude_singular);
    std::vector<SupportContribution<S>> out;
    for (int k : support_root_indices(in.modulus, opts.exclude_singular))
        out.push_back({k, CycScalar::root_of_unity(in.modulus, k), ParameterSpace<S>::constant(CycScalar(0), orders)});
    for (size_t m = 0; m < dists.size(); ++m) {
        const TestFunction<S> phi = weyl_test_function(in, static_cast<int>(m));
        for (size_t a = 0; a < dists[m].atoms.size(); ++a) {
            CircleDistribution<S> single{dists[m].d_power, {dists[m].atoms[a]}};
            out[a].value += pair(single, phi, orders);
        }
    }
    return out;
}

/// The same class through the Frobenius side: flows grouped by parameter,
/// evaluation characters multiplied.
template <class S>
S route_a_index(const AdmissibleClass& e, int genus, const std::vector<int>& orders, Morphism m = Morphism::naive)
{
    std::vector<RatLaurent> flows;
    for (const auto& x : e.exponentials) {
        if (x.parameter < 0 || x.parameter >= ParameterSpace<S>::count)
            throw PreconditionError("exponential insertion refers to a missing parameter");
        if (flows.size() <= static_cast<size_t>(x.parameter))
            flows.resize(static_cast<size_t>(x.parameter) + 1);
        flows[static_cast<size_t>(x.parameter)] += x.character;
    }
    RatLaurent w(Rational(1));
    for (const auto& v : e.evaluations)
        w = w * v;
    return trace_with_insertion(deform_points<S>(LevelData(e.h), flows, m, orders), genus, w);
}

} // namespace verlinde
