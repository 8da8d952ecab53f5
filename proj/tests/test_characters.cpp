#include "verlinde/characters.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace verlinde;

namespace {
CycScalar z(int n, long k) { return CycScalar::root_of_unity(n, k); }
RatLaurent mono(int n, long c = 1) { return RatLaurent::monomial(n, Rational(c)); }
} // namespace

TEST(Characters, SmallRepresentations)
{
    EXPECT_EQ(su2_character(SU2Rep{0}), mono(0));
    EXPECT_EQ(su2_character(SU2Rep{1}), mono(1) + mono(-1));
    EXPECT_EQ(su2_character(SU2Rep{2}), mono(2) + mono(0) + mono(-2));
    EXPECT_THROW(su2_character(SU2Rep{-1}), PreconditionError);
}

TEST(Characters, DotAndDoubleDot)
{
    const RatLaurent f = mono(1) + mono(-1);
    EXPECT_EQ(dot(f), mono(1) - mono(-1));
    EXPECT_EQ(ddot(f), f);
    EXPECT_TRUE(dot(mono(0)).is_zero());
}

TEST(Characters, WeylSymmetryAndDerivationRule)
{
    for (int n = 0; n <= 6; ++n) {
        const RatLaurent f = su2_character(SU2Rep{n});
        EXPECT_EQ(f, f.reflected());
        for (int m = 0; m <= 4; ++m) {
            const RatLaurent g = su2_character(SU2Rep{m}) * mono(3);
            EXPECT_EQ(dot(f * g), dot(f) * g + f * dot(g));
        }
    }
}

TEST(Characters, WeylDenominator)
{
    // 2 - 2cos(2 pi / 3) = 3 and 2 - 2cos(pi / 2) = 2.
    EXPECT_NEAR(2 - 2 * std::cos(2 * M_PI / 3), 3.0, 1e-12);
    EXPECT_EQ(weyl_denominator_sq(z(6, 1)), CycScalar(3));
    EXPECT_EQ(weyl_denominator_sq(z(8, 1)), CycScalar(2));
    EXPECT_EQ(weyl_denominator_sq(CycScalar(1)), CycScalar(0));
    EXPECT_THROW(weyl_denominator_sq(CycScalar(0)), SingularPoint);
}

TEST(Characters, WeylDenominatorIsRealAndNonzeroAwayFromPlusMinusOne)
{
    for (int h = 0; h <= 6; ++h) {
        const int n = 2 * h + 4;
        for (int j = 1; j < n; ++j) {
            if (j == n / 2)
                continue;
            const CycScalar w = weyl_denominator_sq(z(n, j));
            EXPECT_FALSE(w.is_zero());
            EXPECT_EQ(w, w.conjugate());
        }
    }
}

TEST(Characters, EvaluationAtRootsOfUnity)
{
    EXPECT_EQ(eval_at(mono(1) + mono(-1), z(4, 1)), CycScalar(0));
    EXPECT_EQ(eval_at(mono(0), z(7, 3)), CycScalar(1));
    EXPECT_THROW(eval_at(mono(1), CycScalar(0)), SingularPoint);
}

TEST(Characters, EvaluationAtDeformedPoint)
{
    // u = z exp(eps) with eps = -t fdot(z)/N: first-order expansion oracle
    // z (1 + eps_1 t + ...).
    const int h = 1, n = 2 * h + 4, order = 4;
    const CycScalar zeta = z(n, 1);
    const RatLaurent fd = dot(su2_character(SU2Rep{1}));
    const CycScalar eps1 = -eval_at(fd, zeta) / CycScalar(n);
    CycSeries eps(order);
    eps[1] = eps1;
    const DeformedUnitPoint<CycSeries> p(zeta, eps);
    const CycSeries v = eval_at(mono(1), p);
    EXPECT_EQ(v[0], zeta);
    EXPECT_EQ(v[1], zeta * eps1);
    EXPECT_EQ(v[2], zeta * eps1 * eps1 / CycScalar(2));
    EXPECT_EQ(eval_at(mono(0), p), CycSeries::constant(1, order));
    // u * u^{-1} = 1 and Weyl symmetry of |Delta|^2 at the deformed point.
    EXPECT_EQ(p.pow(3) * p.pow(-3), CycSeries::constant(1, order));
    EXPECT_EQ(weyl_denominator_sq(p)[0], CycScalar(3));
}

TEST(Characters, ParseRepresentationSyntax)
{
    EXPECT_EQ(parse_character("su2:2"), su2_character(SU2Rep{2}));
    EXPECT_EQ(parse_character("laurent:{-1:1,1:1}"), su2_character(SU2Rep{1}));
    EXPECT_EQ(parse_character("laurent:{3:1/2}"), RatLaurent::monomial(3, make_rational(1, 2)));
    EXPECT_THROW(parse_character("sl3:1"), PreconditionError);
    EXPECT_THROW(parse_character("su2:x"), PreconditionError);
    EXPECT_THROW(parse_character("laurent:{1}"), PreconditionError);
    EXPECT_EQ(to_string(su2_character(SU2Rep{1})), "{-1:1,1:1}");
}
