#include "harmonia/error.hpp"
#include "harmonia/operators.hpp"
#include "harmonia/reflection.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace harmonia;

namespace {

HarmonicPair half_log() { return HarmonicPair::symmetric(LogLaurentExpr::monomial(0.5, 0, 1)); }
HarmonicPair half_square() { return HarmonicPair::symmetric(LogLaurentExpr::monomial(0.5, 2)); }

void expect_near(Complex got, Complex want, double tol = 1e-12)
{
    EXPECT_LE(std::abs(got - want), tol) << "got " << got << " want " << want;
}

} // namespace

TEST(FormulaName, AllFormulas)
{
    EXPECT_EQ(formula_name(ReflectionFormula::DirichletStudy), "dirichlet");
    EXPECT_EQ(formula_name(ReflectionFormula::NeumannCircle), "neumann");
    EXPECT_EQ(formula_name(ReflectionFormula::RobinCircle), "robin");
    EXPECT_EQ(formula_name(ReflectionFormula::NeumannSchwarz), "schwarz");
}

TEST(DirichletStudy, OffSliceExample)
{
    const BivariateLaurentExpr phi{{0.5, 2, 0}, {0.5, 0, 2}};
    const ReflectionResult res = reflect_dirichlet_study(half_square(), phi, SchwarzMap::unit_circle(), {2.0, 2.0});
    expect_near(res.reflected_point.z, 0.5);
    expect_near(res.reflected_point.zeta, 0.5);
    expect_near(res.correction, 4.25);
    expect_near(res.value, 0.25);
    expect_near(res.value, eval_pair(half_square(), res.reflected_point));
}

TEST(DirichletStudy, ZeroDataIsOdd)
{
    const BiPoint p = BiPoint::polar(0.6, 0.9);
    const ReflectionResult res =
        reflect_dirichlet_study(half_square(), BivariateLaurentExpr{}, SchwarzMap::unit_circle(), p);
    expect_near(res.value, -eval_pair(half_square(), p));
}

TEST(DirichletStudy, BoundaryIsFixedPoint)
{
    const BivariateLaurentExpr phi{{0.5, 2, 0}, {0.5, 0, 2}};
    const BiPoint p = BiPoint::polar(1.0, 0.9);
    const ReflectionResult res = reflect_dirichlet_study(half_square(), phi, SchwarzMap::unit_circle(), p);
    expect_near(res.value, eval_pair(half_square(), p));
}

TEST(DirichletStudy, Involution)
{
    const BivariateLaurentExpr phi{{0.5, 2, 0}, {0.5, 0, 2}};
    const SchwarzMap map = SchwarzMap::unit_circle();
    const BiPoint p = BiPoint::polar(0.7, -1.2);
    const ReflectionResult once = reflect_dirichlet_study(half_square(), phi, map, p);
    // Feed the reflected value back in as the field at the mirror point.
    const FieldFn mirrored = [&](const BiPoint&) { return once.value; };
    const ReflectionResult twice = reflect_dirichlet_study(mirrored, phi, map, once.reflected_point);
    expect_near(twice.value, eval_pair(half_square(), p), 1e-11);
}

TEST(DirichletStudy, PointOffTheRealSlice)
{
    const BivariateLaurentExpr phi{{0.5, 2, 0}, {0.5, 0, 2}};
    const BiPoint p{{0.4, 0.2}, {0.9, -0.1}};
    const ReflectionResult res = reflect_dirichlet_study(half_square(), phi, SchwarzMap::unit_circle(), p);
    expect_near(res.value, eval_pair(half_square(), res.reflected_point));
}

TEST(NeumannCircle, ConstantDataCorrection)
{
    const BivariateLaurentExpr one = BivariateLaurentExpr::constant(1.0);
    for (double r : {0.5, 0.8, 0.95}) {
        const ReflectionResult res = reflect_neumann_circle(half_log(), one, r, 0.3);
        expect_near(res.correction, -2.0 * std::log(r), 1e-14);
        expect_near(res.value, std::log(1.0 / r), 1e-14);
    }
    expect_near(reflect_neumann_circle(half_log(), one, 0.8, 0.0).correction, 0.4462871026284195, 1e-15);
}

TEST(NeumannCircle, BoundaryIsFixedPoint)
{
    const BivariateLaurentExpr phi{{1.0, 2, 0}, {1.0, 0, 2}};
    const HarmonicPair v = HarmonicPair::symmetric(LogLaurentExpr::monomial(1.0, 2));
    const ReflectionResult res = reflect_neumann_circle(v, phi, 1.0, 0.9);
    expect_near(res.correction, 0.0, 1e-15);
    expect_near(res.value, eval_pair(v, BiPoint::polar(1.0, 0.9)));
}

TEST(NeumannCircle, QuadraticData)
{
    // v = r^2 cos 2theta has dv/dr = 2 cos 2theta = z^2 + zeta^2 on the circle.
    const BivariateLaurentExpr phi{{1.0, 2, 0}, {1.0, 0, 2}};
    const HarmonicPair v = half_square();
    for (double t : {-2.0, 0.0, 1.5}) {
        const double r = 0.6;
        const ReflectionResult res = reflect_neumann_circle(v, phi, r, t);
        expect_near(res.correction, (1.0 / (r * r) - r * r) * std::cos(2 * t), 1e-13);
        expect_near(res.value, eval_pair(v, BiPoint::polar(1.0 / r, t)), 1e-12);
    }
}

TEST(NeumannCircle, BiPointOverloadNeedsRealSlice)
{
    const BivariateLaurentExpr one = BivariateLaurentExpr::constant(1.0);
    EXPECT_NO_THROW(reflect_neumann_circle(half_log(), one, BiPoint::polar(0.7, 0.2)));
    try {
        reflect_neumann_circle(half_log(), one, BiPoint{{0.7, 0.0}, {0.5, 0.0}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
    }
}

TEST(NeumannCircle, RadiusMustBePositive)
{
    EXPECT_THROW(circle_data_integral(BivariateLaurentExpr::constant(1.0), 0.0, 0.0), Error);
}

TEST(RobinCircle, ConstantDataTerm)
{
    // w = ln r solves a w + b dw/dr = b on the unit circle.
    for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{2.0, -1.0}, std::pair{0.5, 3.0}}) {
        const RobinParams p = RobinParams::make(a, b);
        const BivariateLaurentExpr data = BivariateLaurentExpr::constant(b);
        const double r = 0.7;
        const ReflectionResult res = reflect_robin_circle(half_log(), data, p, r, 0.4);
        expect_near(res.data_correction, -2.0 * std::log(r), 1e-13);
        expect_near(res.correction, res.data_correction + res.self_correction, 1e-15);
        expect_near(res.value, eval_pair(half_log(), BiPoint::polar(1.0 / r, 0.4)), 1e-12);
    }
}

TEST(RobinCircle, QuadraticSolution)
{
    const RobinParams p = RobinParams::make(0.5, 1.5);
    const HarmonicPair w = half_square();
    const BivariateLaurentExpr data = BivariateLaurentExpr{{0.5, 2, 0}, {0.5, 0, 2}} * Complex(p.a + 2 * p.b);
    for (double r : {0.5, 0.9}) {
        const ReflectionResult res = reflect_robin_circle(w, data, p, r, -0.7);
        expect_near(res.value, eval_pair(w, BiPoint::polar(1.0 / r, -0.7)), 1e-12);
    }
}

TEST(RobinCircle, BoundaryIsFixedPoint)
{
    const RobinParams p = RobinParams::make(0.5, 1.5);
    const ReflectionResult res = reflect_robin_circle(half_log(), BivariateLaurentExpr::constant(1.5), p, 1.0, 1.0);
    expect_near(res.correction, 0.0, 1e-15);
}

TEST(NeumannSchwarz, ZeroDataGivesFieldValue)
{
    const SchwarzMap map = SchwarzMap::circle({0.5, 0.0}, 1.5);
    const BiPoint p = BiPoint::polar(0.6, 0.2);
    const ReflectionResult res = reflect_neumann_schwarz(half_square(), BivariateLaurentExpr{}, map, p);
    expect_near(res.correction, 0.0, 1e-15);
    expect_near(res.value, eval_pair(half_square(), p));
}

TEST(NeumannSchwarz, ReducesToCircleFormula)
{
    const BivariateLaurentExpr phi{{1.0, 2, 0}, {1.0, 0, 2}};
    const HarmonicPair v = HarmonicPair::symmetric(LogLaurentExpr::monomial(1.0, 2));
    for (double r : {0.6, 0.95}) {
        for (double t : {-1.0, 0.8}) {
            const ReflectionResult general =
                reflect_neumann_schwarz(v, phi, SchwarzMap::unit_circle(), BiPoint::polar(r, t));
            const ReflectionResult circle = reflect_neumann_circle(v, phi, r, t);
            expect_near(general.correction, circle.correction, 1e-9);
        }
    }
}

TEST(NeumannSchwarz, HalfPlaneIsEvenForConstantFlux)
{
    // v = y in the upper half-plane has flux -1 through the real axis
    // (outward normal pointing up means into the domain below).
    const HarmonicPair y(LogLaurentExpr::monomial(Complex(0.0, -0.5), 1), LogLaurentExpr::monomial(Complex(0.0, 0.5), 1));
    const SchwarzMap axis = SchwarzMap::line(0.0, 0.0);
    const BivariateLaurentExpr one = BivariateLaurentExpr::constant(1.0);
    const BiPoint p = BiPoint::real_slice({0.3, -0.4});
    const ReflectionResult res = reflect_neumann_schwarz(y, one, axis, p);
    expect_near(res.reflected_point.z, Complex(0.3, 0.4));
    expect_near(res.value, eval_pair(y, res.reflected_point), 1e-9);
}

TEST(NeumannSchwarz, RescaledCircleConstantFlux)
{
    // v = 2C ln r has flux C through |z| = 2; the mirror of r e^{it} is (4/r) e^{it}.
    const double c = 0.8;
    const HarmonicPair v = HarmonicPair::symmetric(LogLaurentExpr::monomial(c, 0, 1));
    const SchwarzMap map = SchwarzMap::circle(0.0, 2.0);
    for (double r : {1.2, 1.9}) {
        const ReflectionResult res =
            reflect_neumann_schwarz(v, BivariateLaurentExpr::constant(c), map, BiPoint::polar(r, 0.3));
        expect_near(res.correction, -4.0 * c * std::log(r / 2.0), 1e-9);
        expect_near(res.value, eval_pair(v, res.reflected_point), 1e-9);
    }
}

TEST(NeumannSchwarz, ZeroLengthPathOnCurve)
{
    const SchwarzMap map = SchwarzMap::unit_circle();
    EXPECT_EQ(schwarz_data_integral(BivariateLaurentExpr::constant(1.0), map, BiPoint::polar(1.0, 0.5)), Complex{});
}
