#include "harmonia/examples.hpp"

#include "harmonia/error.hpp"
#include "harmonia/numerics.hpp"
#include "harmonia/operators.hpp"
#include "harmonia/reflection.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace harmonia {

namespace {

constexpr double kSampleR = 0.8;
constexpr double kSampleTheta = 0.5;
constexpr double kShadowTol = 1e-9;

[[noreturn]] void bad(const std::string& what)
{
    throw Error(ErrorCode::Parse, what);
}

int int_or(const Json& j, const char* key, int fallback)
{
    if (!j.contains(key)) {
        return fallback;
    }
    if (!j.at(key).is_number_integer()) {
        bad(std::string("polar term field '") + key + "' must be an integer");
    }
    return j.at(key).get<int>();
}

PolarCoefficient coefficient_from_json(const Json& j)
{
    if (j.is_number()) {
        return {j.get<double>(), 0.0, 0.0, 0.0};
    }
    if (!j.is_object()) {
        bad("coefficient must be a number or an object");
    }
    auto get = [&](const char* key) {
        if (!j.contains(key)) {
            return 0.0;
        }
        if (!j.at(key).is_number()) {
            bad(std::string("coefficient field '") + key + "' must be a number");
        }
        return j.at(key).get<double>();
    };
    return {get("const"), get("a"), get("b"), get("a_over_b")};
}

std::vector<double> linspace(const Json& j, const char* key, double lo, double hi, int n)
{
    if (j.contains(key)) {
        const Json& s = j.at(key);
        if (!s.is_array() || s.size() != 3 || !s[0].is_number() || !s[1].is_number() ||
            !s[2].is_number_integer()) {
            bad(std::string("grid '") + key + "' must be [from, to, count]");
        }
        lo = s[0].get<double>();
        hi = s[1].get<double>();
        n = s[2].get<int>();
        if (n < 1) {
            bad("grid count must be positive");
        }
    }
    std::vector<double> out;
    for (int i = 0; i < n; ++i) {
        out.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    }
    return out;
}

double scaled(Complex computed, double expected)
{
    return std::abs(computed - expected) / std::max(1.0, std::abs(expected));
}

const Json& required(const Json& j, const char* key)
{
    if (!j.contains(key)) {
        bad(std::string("example is missing '") + key + "'");
    }
    return j.at(key);
}

} // namespace

PolarExpr polar_expr_from_json(const Json& j)
{
    if (!j.is_array()) {
        bad("expected value must be an array of polar terms");
    }
    PolarExpr out;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("c")) {
            bad("polar term needs a coefficient 'c'");
        }
        PolarTerm term;
        term.coeff = coefficient_from_json(t.at("c"));
        term.r_pow = int_or(t, "r", 0);
        term.log_pow = int_or(t, "log", 0);
        term.theta_pow = int_or(t, "theta", 0);
        if (t.contains("cos")) {
            term.trig = PolarTerm::Trig::Cos;
            term.n = int_or(t, "cos", 0);
        } else if (t.contains("sin")) {
            term.trig = PolarTerm::Trig::Sin;
            term.n = int_or(t, "sin", 0);
        }
        if (term.log_pow < 0 || term.theta_pow < 0) {
            bad("polar term powers of ln r and theta must be non-negative");
        }
        out.push_back(term);
    }
    return out;
}

double eval_polar(const PolarExpr& e, double r, double theta, const RobinParams& params)
{
    double sum = 0.0;
    for (const auto& t : e) {
        double v = t.coeff.value(params) * std::pow(r, t.r_pow) * std::pow(std::log(r), t.log_pow) *
                   std::pow(theta, t.theta_pow);
        if (t.trig == PolarTerm::Trig::Cos) {
            v *= std::cos(t.n * theta);
        } else if (t.trig == PolarTerm::Trig::Sin) {
            v *= std::sin(t.n * theta);
        }
        sum += v;
    }
    return sum;
}

std::string_view status_name(ExampleRow::Status s) noexcept
{
    switch (s) {
    case ExampleRow::Status::Pass:
        return "PASS";
    case ExampleRow::Status::Fail:
        return "FAIL";
    case ExampleRow::Status::Discrepancy:
        return "DISCREPANCY";
    }
    return "FAIL";
}

std::vector<ExampleRow> run_examples(const Json& fixture, const ExampleOptions& opts)
{
    if (!fixture.is_object() || !fixture.contains("examples") || !fixture.at("examples").is_array()) {
        bad("fixture must be an object with an 'examples' array");
    }
    std::vector<ExampleRow> rows;
    for (const Json& ex : fixture.at("examples")) {
        if (!ex.is_object()) {
            bad("example must be an object");
        }
        ExampleRow row;
        row.id = required(ex, "id").get<std::string>();
        row.title = ex.value("title", "");
        row.kind = required(ex, "kind").get<std::string>();
        row.note = ex.value("note", "");
        row.tolerance = opts.tolerance.value_or(ex.value("tolerance", 1e-10));
        const PolarExpr expected = polar_expr_from_json(required(ex, "expected"));
        std::optional<PolarExpr> printed;
        if (ex.contains("printed")) {
            printed = polar_expr_from_json(ex.at("printed"));
        }

        std::vector<RobinParams> param_sets{RobinParams{}};
        if (ex.contains("params")) {
            if (!ex.at("params").is_array() || ex.at("params").empty()) {
                bad("'params' must be a non-empty array");
            }
            param_sets.clear();
            for (const auto& p : ex.at("params")) {
                param_sets.push_back(params_from_json(p));
            }
        }

        const Json grid = ex.value("grid", Json::object());
        const auto rs = linspace(grid, "r", 0.6, 1.4, 10);
        const auto thetas = linspace(grid, "theta", -2.0, 2.0, 10);
        const bool shadow = ex.value("shadow", false);
        const HarmonicPair solution = pair_from_json(required(ex, "solution"), opts.cut_angle);

        double printed_max = 0.0;
        double shadow_max = 0.0;
        bool first_params = true;
        for (const RobinParams& params : param_sets) {
            // Value of the computed quantity at (r, theta).
            std::function<Complex(double, double)> computed;
            std::function<double(double, double)> identity;
            HarmonicPair field;
            BivariateLaurentExpr data;
            if (row.kind == "dtn" || row.kind == "rtn") {
                field = row.kind == "dtn" ? neumann_from_dirichlet_pair(solution)
                                          : neumann_from_robin_pair(solution, params);
                computed = [&](double r, double t) { return eval_pair(field, BiPoint::polar(r, t)); };
            } else if (row.kind == "neumann_reflect" || row.kind == "robin_reflect") {
                data = boundary_data_from_json(required(ex, "data"), params);
                const bool robin = row.kind == "robin_reflect";
                auto reflect = [&, robin](double r, double t) {
                    return robin ? reflect_robin_circle(solution, data, params, r, t)
                                 : reflect_neumann_circle(solution, data, r, t);
                };
                computed = [reflect, robin](double r, double t) {
                    const ReflectionResult res = reflect(r, t);
                    return robin ? res.data_correction : res.correction;
                };
                // The supplied solution evaluated directly at the mirror point.
                identity = [reflect, &solution](double r, double t) {
                    const ReflectionResult res = reflect(r, t);
                    return std::abs(res.value - eval_pair(solution, res.reflected_point)) /
                           std::max(1.0, std::abs(res.value));
                };
            } else {
                bad("unknown example kind '" + row.kind + "'");
            }

            // Operator outputs are compared modulo the constant pinned at (1, 0).
            const bool pinned = row.kind == "dtn" || row.kind == "rtn";
            auto reference = [&](const PolarExpr& e, double r, double t) {
                return eval_polar(e, r, t, params) - (pinned ? eval_polar(e, 1.0, 0.0, params) : 0.0);
            };

            for (double r : rs) {
                for (double t : thetas) {
                    const Complex c = computed(r, t);
                    row.max_residual = std::max(row.max_residual, scaled(c, reference(expected, r, t)));
                    if (identity) {
                        row.max_residual = std::max(row.max_residual, identity(r, t));
                    }
                    if (printed) {
                        printed_max = std::max(printed_max, scaled(c, reference(*printed, r, t)));
                    }
                    if (shadow) {
                        const PathSpec ray = PathSpec::radial_ray(t, 1.0 / r, r, 2);
                        const Complex q = integrate_path(
                            [&](Complex tau) { return data.eval(tau, 1.0 / tau) / tau; }, ray);
                        const Complex numeric = -q / (row.kind == "robin_reflect" ? params.b : 1.0);
                        shadow_max = std::max(shadow_max, std::abs(numeric - c));
                    }
                    ++row.points;
                }
            }
            if (first_params) {
                row.sample_r = kSampleR;
                row.sample_theta = kSampleTheta;
                row.sample_expected = reference(expected, kSampleR, kSampleTheta);
                row.sample_computed = computed(kSampleR, kSampleTheta);
                first_params = false;
            }
        }

        bool pass = row.max_residual <= row.tolerance;
        if (printed) {
            row.printed_residual = printed_max;
        }
        if (shadow) {
            row.shadow_residual = shadow_max;
            row.shadow_tolerance = opts.tolerance.value_or(kShadowTol);
            if (shadow_max > row.shadow_tolerance) {
                char buf[96];
                std::snprintf(buf, sizeof buf, "quadrature shadow residual %.3e exceeds %.0e", shadow_max,
                              row.shadow_tolerance);
                row.note += row.note.empty() ? buf : std::string("; ") + buf;
                pass = false;
            }
        }
        if (!pass) {
            row.status = ExampleRow::Status::Fail;
        } else if (ex.value("discrepancy", false)) {
            row.status = ExampleRow::Status::Discrepancy;
        } else {
            row.status = ExampleRow::Status::Pass;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace harmonia
