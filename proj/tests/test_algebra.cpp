#include "harmonia/algebra.hpp"
#include "harmonia/error.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace harmonia;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex I{0.0, 1.0};

void expect_near(Complex got, Complex want, double tol = 1e-14)
{
    EXPECT_LE(std::abs(got - want), tol) << "got " << got << " want " << want;
}

} // namespace

TEST(Eval, MonomialAtOne)
{
    expect_near(eval(LogLaurentExpr::monomial(0.5, 2), 1.0), 0.5);
}

TEST(Eval, LogAtE)
{
    expect_near(eval(LogLaurentExpr::monomial(0.5, 0, 1), std::numbers::e), 0.5);
}

TEST(Eval, SquaredLogAtI)
{
    const Complex got = eval(LogLaurentExpr::monomial(0.25, 0, 2), I);
    expect_near(got, -kPi * kPi / 16.0);
    expect_near(got, 0.25 * std::pow(std::log(I), 2));
}

TEST(Eval, ZeroIsDomainError)
{
    try {
        eval(LogLaurentExpr::monomial(1.0, -1), 0.0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Domain);
    }
}

TEST(Eval, NearCutOnlyMattersWithLogs)
{
    const Complex z = std::polar(1.0, kPi - 1e-9);
    EXPECT_NO_THROW(eval(LogLaurentExpr::monomial(1.0, 3), z));
    try {
        eval(LogLaurentExpr::monomial(1.0, 0, 1), z);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CutProximity);
    }
}

TEST(Eval, CutWindowSelectsBranch)
{
    const LogLaurentExpr principal = LogLaurentExpr::monomial(1.0, 0, 1);
    const LogLaurentExpr shifted = principal.with_cut(0.0);
    const Complex z = std::polar(1.0, 2.0);
    expect_near(eval(principal, z), Complex{0.0, 2.0});
    expect_near(eval(shifted, z), Complex{0.0, 2.0 - 2.0 * kPi});
}

TEST(Differentiate, Examples)
{
    EXPECT_TRUE(equivalent(differentiate(LogLaurentExpr::monomial(0.5, 0, 1)), LogLaurentExpr::monomial(0.5, -1)));
    EXPECT_TRUE(equivalent(differentiate(LogLaurentExpr::monomial(0.5, 2)), LogLaurentExpr::monomial(1.0, 1)));
    EXPECT_TRUE(equivalent(differentiate(LogLaurentExpr::monomial(0.25, 0, 2)), LogLaurentExpr::monomial(0.5, -1, 1)));
}

TEST(Differentiate, ConstantVanishes)
{
    EXPECT_TRUE(differentiate(LogLaurentExpr::constant(3.0)).empty());
}

TEST(Antiderivative, Examples)
{
    const Complex c{1.7, -0.3};
    EXPECT_TRUE(equivalent(antiderivative_over_arg(LogLaurentExpr::constant(c)), LogLaurentExpr::monomial(c, 0, 1)));
    EXPECT_TRUE(equivalent(antiderivative_over_arg(LogLaurentExpr::monomial(0.5, 0, 1)),
                           LogLaurentExpr::monomial(0.25, 0, 2)));
    EXPECT_TRUE(equivalent(antiderivative_over_arg(LogLaurentExpr::monomial(0.5, 2)), LogLaurentExpr::monomial(0.25, 2)));
}

TEST(Antiderivative, RoundTripWithLogsAndNegativePowers)
{
    const LogLaurentExpr e{{{1.0, 2.0}, -3, 2}, {{0.5, 0.0}, 0, 1}, {{-2.0, 1.0}, 4, 0}, {{0.0, 1.0}, 1, 2}};
    EXPECT_TRUE(equivalent(differentiate(antiderivative_over_arg(e)), e.shifted(-1)));
}

TEST(Antiderivative, DefiniteIntegralMatchesClosedForm)
{
    // int_{0.5}^{1} (1/2 rho^2) / rho d rho = 1/4 (1 - 0.25)
    expect_near(integrate_over_arg(LogLaurentExpr::monomial(0.5, 2), 0.5, 1.0), 0.1875);
}

TEST(CircleRestriction, Examples)
{
    const BivariateLaurentExpr phi{{1.0, 2, 0}, {1.0, 0, 2}};
    EXPECT_TRUE(equivalent(restrict_bivariate_to_circle(phi),
                           LogLaurentExpr{{1.0, 2, 0}, {1.0, -2, 0}}));
    const BivariateLaurentExpr vanishing{{2.0, 1, 1}, {-2.0, 0, 0}};
    EXPECT_TRUE(restrict_bivariate_to_circle(vanishing).empty());
    EXPECT_TRUE(equivalent(restrict_bivariate_to_circle(BivariateLaurentExpr::constant(4.0)),
                           LogLaurentExpr::constant(4.0)));
}

TEST(RayRestriction, Examples)
{
    EXPECT_TRUE(equivalent(restrict_to_ray(LogLaurentExpr::monomial(0.5, 2), 0.0), LogLaurentExpr::monomial(0.5, 2)));

    const LogLaurentExpr half_log = restrict_to_ray(LogLaurentExpr::monomial(0.5, 0, 1), kPi / 2);
    EXPECT_TRUE(equivalent(half_log, LogLaurentExpr{{0.5, 0, 1}, {I * (kPi / 4), 0, 0}}));
    expect_near(eval(half_log, 2.0), eval(LogLaurentExpr::monomial(0.5, 0, 1), 2.0 * I));

    const double theta = 0.7;
    EXPECT_TRUE(equivalent(restrict_to_ray(LogLaurentExpr::monomial(1.0, -1), theta),
                           LogLaurentExpr::monomial(std::polar(1.0, -theta), -1)));
}

TEST(RayRestriction, RayOnCutIsRejectedForLogs)
{
    EXPECT_THROW(restrict_to_ray(LogLaurentExpr::monomial(1.0, 0, 1), kPi), Error);
    EXPECT_NO_THROW(restrict_to_ray(LogLaurentExpr::monomial(1.0, 2), kPi));
}

TEST(ReciprocalArgument, FlipsPowersAndLogSigns)
{
    const LogLaurentExpr e{{2.0, 3, 1}};
    const LogLaurentExpr flipped = e.reciprocal_argument();
    expect_near(eval(flipped, 1.7), eval(e, 1.0 / 1.7));
}

TEST(ConjugateReflect, MatchesConjugateOfValues)
{
    const LogLaurentExpr e{{{1.0, 2.0}, 2, 1}, {{0.5, -1.0}, -1, 2}};
    const LogLaurentExpr r = e.conjugate_reflect();
    const Complex z = std::polar(1.3, 2.9);
    expect_near(eval(r, std::conj(z)), std::conj(eval(e, z)), 1e-13);
}

TEST(Arithmetic, ProductAndSum)
{
    const LogLaurentExpr a{{1.0, 1, 0}, {2.0, 0, 1}};
    const LogLaurentExpr b{{3.0, -1, 1}};
    const Complex z{0.4, 0.9};
    expect_near(eval(a * b, z), eval(a, z) * eval(b, z), 1e-13);
    expect_near(eval(a - b, z), eval(a, z) - eval(b, z), 1e-13);
}

TEST(Arithmetic, CancellationDropsTerms)
{
    LogLaurentExpr e{{1.0, 2, 0}};
    e -= LogLaurentExpr{{1.0, 2, 0}};
    EXPECT_TRUE(e.empty());
}

TEST(Arithmetic, NonFiniteCoefficientRejected)
{
    LogLaurentExpr e;
    EXPECT_THROW(e.add_term(Complex{std::nan(""), 0.0}, 1, 0), Error);
}

TEST(Bivariate, EvalAndProduct)
{
    const BivariateLaurentExpr a{{1.0, 1, 0}, {1.0, 0, 1}};
    const BivariateLaurentExpr b{{2.0, 1, 1}};
    const Complex z{0.3, 1.1};
    const Complex zeta{2.0, -0.5};
    expect_near((a * b).eval(z, zeta), a.eval(z, zeta) * b.eval(z, zeta), 1e-13);
}

TEST(Ipow, NegativeAndZeroPowers)
{
    expect_near(ipow({2.0, 0.0}, -3), 0.125);
    expect_near(ipow({1.5, 2.0}, 0), 1.0);
    expect_near(ipow(I, 5), I);
}

TEST(BranchArgument, WindowRepresentative)
{
    EXPECT_NEAR(branch_argument(3.5, kPi), 3.5 - 2 * kPi, 1e-15);
    EXPECT_NEAR(branch_argument(kPi, kPi), kPi, 1e-15);
    EXPECT_NEAR(branch_argument(-0.5, 0.0), -0.5, 1e-15);
    EXPECT_NEAR(branch_argument(0.5, 0.0), 0.5 - 2 * kPi, 1e-15);
}
