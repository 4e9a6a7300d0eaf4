#pragma once

// Golden examples driven by a JSON fixture. Expected values are written as
// sums of polar terms
//
//     c * r^p * (ln r)^q * theta^s * {1 | cos(n theta) | sin(n theta)},
//
// where c may depend on Robin parameters: c = const + a*A + b*B + (a/b)*Q.

#include "harmonia/harmonic.hpp"
#include "harmonia/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace harmonia {

struct PolarCoefficient {
    double constant = 0.0;
    double a = 0.0;
    double b = 0.0;
    double a_over_b = 0.0;

    double value(const RobinParams& p) const { return constant + a * p.a + b * p.b + a_over_b * p.a / p.b; }
};

struct PolarTerm {
    enum class Trig { One, Cos, Sin };

    PolarCoefficient coeff;
    int r_pow = 0;
    int log_pow = 0;
    int theta_pow = 0;
    Trig trig = Trig::One;
    int n = 0;
};

using PolarExpr = std::vector<PolarTerm>;

PolarExpr polar_expr_from_json(const Json& j);
double eval_polar(const PolarExpr& e, double r, double theta, const RobinParams& params = {});

struct ExampleRow {
    enum class Status { Pass, Fail, Discrepancy };

    std::string id;
    std::string title;
    std::string kind;
    Status status = Status::Fail;
    int points = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    double sample_r = 0.0;
    double sample_theta = 0.0;
    double sample_expected = 0.0;
    Complex sample_computed;
    /// Residual against the alternative printed form, when the fixture has one.
    std::optional<double> printed_residual;
    /// Quadrature cross-check of an exact correction, when requested.
    std::optional<double> shadow_residual;
    double shadow_tolerance = 0.0;
    std::string note;

    bool ok() const { return status != Status::Fail; }
};

std::string_view status_name(ExampleRow::Status s) noexcept;

struct ExampleOptions {
    std::optional<double> tolerance;
    double cut_angle = kDefaultCutAngle;
};

/// Runs every example of the fixture. Throws Error(Parse) on a malformed fixture.
std::vector<ExampleRow> run_examples(const Json& fixture, const ExampleOptions& opts = {});

} // namespace harmonia
