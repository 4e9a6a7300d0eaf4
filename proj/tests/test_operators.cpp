#include "harmonia/error.hpp"
#include "harmonia/operators.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace harmonia;

namespace {

HarmonicPair half_log() { return HarmonicPair::symmetric(LogLaurentExpr::monomial(0.5, 0, 1)); }
HarmonicPair half_square() { return HarmonicPair::symmetric(LogLaurentExpr::monomial(0.5, 2)); }

// Largest spread of f - g over a polar grid, which ignores the additive constant.
template <class F, class G>
double spread(F f, G g)
{
    double lo = INFINITY;
    double hi = -INFINITY;
    for (double r : {0.5, 0.8, 1.0, 1.3}) {
        for (double t : {-2.5, -1.0, 0.0, 0.7, 2.0}) {
            const double d = f(r, t) - g(r, t);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
    }
    return hi - lo;
}

double at(const HarmonicPair& h, double r, double t)
{
    return eval_real(h, r * std::cos(t), r * std::sin(t));
}

} // namespace

TEST(NeumannFromDirichletDisk, Examples)
{
    const BivariateLaurentExpr cos2{{0.5, 2, 0}, {0.5, 0, 2}};
    const BivariateLaurentExpr cos1{{0.5, 1, 0}, {0.5, 0, 1}};
    for (double r : {0.2, 0.7, 1.0}) {
        for (double t : {-1.0, 0.5}) {
            const Complex z = std::polar(r, t);
            EXPECT_NEAR(neumann_from_dirichlet_disk(cos2, z), 0.5 * r * r * std::cos(2 * t), 1e-9);
            EXPECT_NEAR(neumann_from_dirichlet_disk(cos1, z), r * std::cos(t), 1e-9);
            EXPECT_NEAR(neumann_from_dirichlet_disk(BivariateLaurentExpr{}, z), 0.0, 1e-15);
        }
    }
}

TEST(NeumannFromDirichletDisk, NonzeroMeanRejected)
{
    try {
        neumann_from_dirichlet_disk(BivariateLaurentExpr::constant(1.0), {0.3, 0.1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonzeroMean);
    }
}

TEST(NeumannFromDirichletPair, Constant)
{
    const double c = 2.5;
    const HarmonicPair v = neumann_from_dirichlet_pair(HarmonicPair::constant(c));
    EXPECT_LT(spread([&](double r, double t) { return at(v, r, t); }, [&](double r, double) { return c * std::log(r); }),
              1e-13);
}

TEST(NeumannFromDirichletPair, LogGivesHalfSquaredLogForm)
{
    const HarmonicPair v = neumann_from_dirichlet_pair(half_log());
    const auto derived = [](double r, double t) { return 0.5 * (std::log(r) * std::log(r) - t * t); };
    EXPECT_LT(spread([&](double r, double t) { return at(v, r, t); }, derived), 1e-13);
    // The quarter-coefficient form differs by more than a constant.
    const auto quarter = [](double r, double t) { return 0.25 * (std::log(r) * std::log(r) - t * t); };
    EXPECT_GT(spread([&](double r, double t) { return at(v, r, t); }, quarter), 0.1);
}

TEST(NeumannFromDirichletPair, Square)
{
    const HarmonicPair v = neumann_from_dirichlet_pair(half_square());
    EXPECT_LT(spread([&](double r, double t) { return at(v, r, t); },
                     [](double r, double t) { return 0.5 * r * r * std::cos(2 * t); }),
              1e-13);
}

TEST(NeumannFromDirichletPair, PinnedAtBase)
{
    BasePointNormalization norm;
    norm.value_at_base = 1.25;
    const HarmonicPair v = neumann_from_dirichlet_pair(half_log(), norm);
    EXPECT_NEAR(eval_real(v, 1.0, 0.0), 1.25, 1e-14);
}

TEST(NeumannFromDirichletPair, BoundaryRecovery)
{
    const HarmonicPair u = half_square() + HarmonicPair::symmetric(LogLaurentExpr::monomial({0.3, -0.2}, -1));
    const HarmonicPair v = neumann_from_dirichlet_pair(u);
    for (double t : {-2.0, 0.1, 1.4}) {
        EXPECT_NEAR(radial_derivative(v, BiPoint::polar(1.0, t), t).real(), at(u, 1.0, t), 1e-12);
    }
}

TEST(NeumannFromRobinPair, LogExample)
{
    for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{2.0, -1.0}, std::pair{0.5, 3.0}}) {
        const HarmonicPair v = neumann_from_robin_pair(half_log(), RobinParams::make(a, b));
        const auto want = [a, b](double r, double t) {
            return 0.5 * b * std::log(r) + 0.25 * a * (std::log(r) * std::log(r) - t * t);
        };
        EXPECT_LT(spread([&](double r, double t) { return at(v, r, t); }, want), 1e-12) << a << "," << b;
    }
}

TEST(NeumannFromRobinPair, ZeroAndScaling)
{
    const HarmonicPair v0 = neumann_from_robin_pair(HarmonicPair{}, RobinParams::make(1.0, 2.0));
    EXPECT_LT(spread([&](double r, double t) { return at(v0, r, t); }, [](double, double) { return 0.0; }), 1e-15);

    const double b = 1.7;
    const HarmonicPair v = neumann_from_robin_pair(half_square(), RobinParams::make(0.0, b));
    EXPECT_LT(spread([&](double r, double t) { return at(v, r, t); },
                     [b](double r, double t) { return 0.5 * b * r * r * std::cos(2 * t); }),
              1e-13);
}

TEST(DirichletFromRobinPair, Examples)
{
    const double a = 0.8;
    const double b = -1.5;
    const RobinParams p = RobinParams::make(a, b);
    const HarmonicPair u = dirichlet_from_robin_pair(half_log(), p);
    for (double r : {0.5, 1.0, 1.5}) {
        EXPECT_NEAR(at(u, r, 0.3), 0.5 * a * std::log(r) + 0.5 * b, 1e-14);
    }
    const HarmonicPair u2 = dirichlet_from_robin_pair(half_square(), p);
    EXPECT_NEAR(at(u2, 0.7, 0.4), 0.5 * (a + 2 * b) * 0.49 * std::cos(0.8), 1e-14);
    EXPECT_NEAR(at(dirichlet_from_robin_pair(HarmonicPair{}, p), 0.7, 0.4), 0.0, 1e-15);
}

TEST(DirichletFromRobinPair, TraceIsHalfRobinTrace)
{
    const RobinParams p = RobinParams::make(1.3, 0.6);
    const HarmonicPair w = half_log() + half_square();
    const HarmonicPair u = dirichlet_from_robin_pair(w, p);
    for (double t : {-2.0, 0.5, 2.9}) {
        EXPECT_NEAR(at(u, 1.0, t), 0.5 * robin_trace_circle(w, p, t).real(), 1e-13);
    }
}

TEST(SolveRobin, SquareWithPureNeumann)
{
    const LogLaurentExpr f = LogLaurentExpr::monomial(0.5, 2);
    const LogLaurentExpr h = solve_robin_analytic(f, f, RobinParams::make(0.0, 1.0));
    // z f' + g = z^2 + z^2 / 2, and b z h' = 2 h for h ~ z^2.
    EXPECT_TRUE(equivalent(h, LogLaurentExpr::monomial(0.75, 2)));
}

TEST(SolveRobin, ConstantRhs)
{
    const LogLaurentExpr h =
        solve_robin_analytic(LogLaurentExpr{}, LogLaurentExpr::constant(3.0), RobinParams::make(2.0, 5.0));
    EXPECT_TRUE(equivalent(h, LogLaurentExpr::constant(1.5)));
}

TEST(SolveRobin, ResonantTermGainsLog)
{
    // a + b k = 0 with k = 2.
    const RobinParams p = RobinParams::make(-2.0, 1.0);
    const Complex c{1.5, 0.5};
    const LogLaurentExpr h = solve_robin_analytic(LogLaurentExpr{}, LogLaurentExpr::monomial(c, 2), p);
    EXPECT_TRUE(equivalent(h, LogLaurentExpr::monomial(c / p.b, 2, 1)));
}

TEST(SolveRobin, IdentityHoldsWithLogs)
{
    const RobinParams p = RobinParams::make(0.7, 1.9);
    const LogLaurentExpr f{{{1.0, 0.5}, 2, 1}, {-0.3, -1, 0}};
    const LogLaurentExpr g{{2.0, 0, 2}, {{0.0, 1.0}, 3, 0}};
    const LogLaurentExpr h = solve_robin_analytic(f, g, p);
    const LogLaurentExpr lhs = p.a * h + p.b * differentiate(h).shifted(1);
    const LogLaurentExpr rhs = differentiate(f).shifted(1) + g;
    EXPECT_TRUE(equivalent(lhs, rhs, 1e-13, 1e-13));
}

TEST(SolveRobin, NearResonanceRejected)
{
    const RobinParams p = RobinParams::make(-2.0 + 1e-10, 1.0);
    try {
        solve_robin_analytic(LogLaurentExpr{}, LogLaurentExpr::monomial(1.0, 2), p);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsupportedResonance);
    }
}

TEST(SchwarzNeumann, ZeroIsConstant)
{
    const SchwarzNeumannField v = neumann_from_dirichlet_schwarz(HarmonicPair{}, SchwarzMap::circle(0.0, 2.0));
    EXPECT_LE(std::abs(v(BiPoint::polar(1.5, 0.3))), 1e-15);
}

TEST(SchwarzNeumann, ConstantOnRescaledCircleHasUnitFlux)
{
    const double c = 1.7;
    const SchwarzMap map = SchwarzMap::circle(0.0, 2.0);
    const SchwarzNeumannField v = neumann_from_dirichlet_schwarz(HarmonicPair::constant(c), map);
    const double h = 1e-4;
    for (double t : {-0.8, 0.0, 0.9}) {
        const double outer = v(BiPoint::polar(2.0 + h, t)).real();
        const double inner = v(BiPoint::polar(2.0 - h, t)).real();
        EXPECT_NEAR((outer - inner) / (2 * h), c, 1e-6);
    }
}

TEST(SchwarzNeumann, UnitCircleMatchesExactOperator)
{
    const HarmonicPair u = half_square() + HarmonicPair::constant(0.0);
    const SchwarzNeumannField v = neumann_from_dirichlet_schwarz(u, SchwarzMap::unit_circle());
    const HarmonicPair exact = neumann_from_dirichlet_pair(u);
    for (double r : {0.7, 0.9}) {
        for (double t : {-0.5, 0.4}) {
            const BiPoint p = BiPoint::polar(r, t);
            EXPECT_LE(std::abs(v(p) - eval_pair(exact, p)), 1e-9);
        }
    }
}
