#include "verlinde/characters.hpp"
#include "verlinde/series.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace verlinde;

namespace {

RatSeries series(std::vector<Rational> c) { return RatSeries(std::move(c)); }
Rational q(long a, long b = 1) { return make_rational(a, b); }

RatSeries random_series(std::mt19937& rng, int order, Rational c0)
{
    std::uniform_int_distribution<int> num(-4, 4);
    std::vector<Rational> c{c0};
    for (int k = 1; k <= order; ++k)
        c.push_back(q(num(rng), 3));
    return series(c);
}

} // namespace

TEST(TSeries, GeometricInverse)
{
    const int k = 8;
    RatSeries s(k);
    s[0] = 1;
    s[1] = 1;
    const RatSeries inv = s.inverse();
    for (int i = 0; i <= k; ++i)
        EXPECT_EQ(inv[i], i % 2 == 0 ? 1 : -1);
    EXPECT_EQ(s * inv, RatSeries::constant(1, k));
    EXPECT_EQ(RatSeries::constant(1, k).inverse(), RatSeries::constant(1, k));
}

TEST(TSeries, SquareOfBinomial)
{
    RatSeries s(4);
    s[0] = 1;
    s[1] = 1;
    const RatSeries sq = s * s;
    EXPECT_EQ(sq, series({1, 2, 1, 0, 0}));
}

TEST(TSeries, NonInvertibleConstantTerm)
{
    EXPECT_THROW(RatSeries::variable(4).inverse(), DivisionByZero);
    EXPECT_THROW(RatSeries::variable(4).pow_int(-1), DivisionByZero);
}

TEST(TSeries, ExpOfTPlusTSquared)
{
    // Direct Taylor expansion of e^t e^{t^2}: 1, 1, 1/2 + 1, 1/6 + 1.
    const RatSeries s = series({0, 1, 1, 0});
    EXPECT_EQ(s.exp(), series({1, 1, q(3, 2), q(7, 6)}));
}

TEST(TSeries, ExpLogPreconditions)
{
    EXPECT_THROW(series({1, 1}).exp(), PreconditionError);
    EXPECT_THROW(series({2, 1}).log(), PreconditionError);
}

TEST(TSeries, ExpOfTTimesExpOfMinusT)
{
    const RatSeries t = RatSeries::variable(8);
    EXPECT_EQ(t.exp() * (-t).exp(), RatSeries::constant(1, 8));
    const RatSeries at = t * q(5, 3);
    EXPECT_EQ(at.exp().log(), at);
}

TEST(TSeries, PowIntExamples)
{
    RatSeries s(6);
    s[0] = q(1, 2);
    s[1] = 1;
    const RatSeries inv = s.pow_int(-1);
    // Geometric series oracle: 1/(1/2 + t) = 2 sum (-2t)^k.
    Rational expected = 2;
    for (int k = 0; k <= 6; ++k) {
        EXPECT_EQ(inv[k], expected);
        expected *= -2;
    }
    EXPECT_EQ(s.pow_int(0), RatSeries::constant(1, 6));
}

TEST(TSeries, PowersAddAndExpLogInvert)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const RatSeries s = random_series(rng, 7, q(trial + 1, 2));
        for (long a : {-3L, -1L, 0L, 2L})
            for (long b : {-2L, 1L, 3L})
                EXPECT_EQ(s.pow_int(a) * s.pow_int(b), s.pow_int(a + b));
        const RatSeries n = random_series(rng, 7, 0);
        EXPECT_EQ(n.exp().log(), n);
        const RatSeries u = random_series(rng, 7, 1);
        EXPECT_EQ(u.log().exp(), u);
    }
}

TEST(TSeries, MixedOrdersTruncateToMinimum)
{
    const RatSeries a = RatSeries::variable(3), b = RatSeries::variable(6);
    EXPECT_EQ((a + b).order(), 3);
    EXPECT_EQ((a * b).order(), 3);
}

TEST(TSeries, Composition)
{
    // exp(t) composed with 2t is exp(2t).
    const RatSeries t = RatSeries::variable(6);
    EXPECT_EQ(t.exp().compose(t * Rational(2)), (t * Rational(2)).exp());
}

TEST(NewtonSolve, SquareRootOfOnePlusT)
{
    using Fn = std::function<CycSeries(const CycSeries&)>;
    const CycSeries t = CycSeries::variable(6);
    const Fn f = [&](const CycSeries& x) { return x * x - CycSeries::constant(1, 6) - t; };
    const Fn df = [](const CycSeries& x) { return x * CycScalar(2); };
    const CycSeries x = newton_solve<CycSeries>(f, df, CycSeries::constant(1, 6));
    // Binomial series of (1+t)^{1/2}.
    EXPECT_EQ(x[0], CycScalar(1));
    EXPECT_EQ(x[1], CycScalar(q(1, 2)));
    EXPECT_EQ(x[2], CycScalar(q(-1, 8)));
    EXPECT_EQ(x[3], CycScalar(q(1, 16)));
    EXPECT_EQ(x[4], CycScalar(q(-5, 128)));
    EXPECT_TRUE(f(x).is_zero());
}

TEST(NewtonSolve, AlreadySolved)
{
    using Fn = std::function<CycSeries(const CycSeries&)>;
    const CycSeries x0 = CycSeries::constant(CycScalar::root_of_unity(5, 2), 4);
    const Fn f = [&](const CycSeries& x) { return x - x0; };
    const Fn df = [](const CycSeries& x) { return like(x, Rational(1)); };
    EXPECT_EQ(newton_solve<CycSeries>(f, df, x0), x0);
}

TEST(NewtonSolve, SingularDerivative)
{
    using Fn = std::function<CycSeries(const CycSeries&)>;
    const CycSeries t = CycSeries::variable(4);
    const Fn f = [&](const CycSeries& x) { return x * x - t; };
    const Fn df = [](const CycSeries& x) { return x * CycScalar(2); };
    EXPECT_THROW(newton_solve<CycSeries>(f, df, CycSeries::constant(0, 4)), SingularPoint);
}

TEST(NewtonSolve, DeformedRootFirstOrder)
{
    // x^N exp(t fdot(x)) = 1 from x0 = z; first-order perturbation oracle:
    // x = z e^eps, N eps = -t fdot(z) mod t^2.
    using Fn = std::function<CycSeries(const CycSeries&)>;
    const int h = 1, n = 2 * h + 4, order = 3;
    const RatLaurent fd = dot(su2_character(SU2Rep{1}));
    const CycScalar zeta = CycScalar::root_of_unity(n, 1);
    const CycSeries t = CycSeries::variable(order);
    auto eval = [&](const CycSeries& x) {
        CycSeries acc = like(x, Rational(0));
        const CycSeries xinv = x.inverse();
        for (const auto& [e, c] : fd.terms())
            acc += scale(e >= 0 ? x.pow_int(e) : xinv.pow_int(-e), c);
        return acc;
    };
    const Fn f = [&](const CycSeries& x) { return x.pow_int(n) * (t * eval(x)).exp() - like(x, Rational(1)); };
    const Fn df = [&](const CycSeries& x) { return x.pow_int(n - 1) * CycScalar(n); };
    const CycSeries x = newton_solve<CycSeries>(f, df, CycSeries::constant(zeta, order));
    EXPECT_EQ(x[0], zeta);
    EXPECT_EQ(x[1], -zeta * eval_at(fd, zeta) / CycScalar(n));
}

TEST(NewtonSolve, TwoParameters)
{
    // x^2 = 1 + t1 + t2 over nested series.
    using Fn = std::function<CycSeries2(const CycSeries2&)>;
    const CycSeries inner_t = CycSeries::variable(3);
    const CycSeries2 t1 = CycSeries2::variable(3, CycSeries::constant(0, 3));
    const CycSeries2 t2 = CycSeries2::constant(inner_t, 3);
    const CycSeries2 one = like(t1, Rational(1));
    const Fn f = [&](const CycSeries2& x) { return x * x - one - t1 - t2; };
    const Fn df = [](const CycSeries2& x) { return scale(x, Rational(2)); };
    const CycSeries2 x = newton_solve<CycSeries2>(f, df, one);
    EXPECT_TRUE(f(x).is_zero());
    EXPECT_EQ(x[1][1], CycScalar(make_rational(-1, 4)));  // d^2/dt1 dt2 of sqrt(1+t1+t2) at 0
}
