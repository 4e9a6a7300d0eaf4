#include "harmonia/operators.hpp"

#include "harmonia/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace harmonia {

namespace {

constexpr double kResonantTol = 1e-12;
constexpr double kIllConditionedTol = 1e-8;

void require_unit_circle_base(const BasePointNormalization& norm)
{
    if (std::abs(std::abs(norm.z0) - 1.0) > 1e-12) {
        throw Error(ErrorCode::InvalidArgument, "base point must lie on the unit circle");
    }
}

HarmonicPair pinned(HarmonicPair v, const BasePointNormalization& norm, Complex zeta0)
{
    const Complex at_base = eval_pair(v, {norm.z0, zeta0});
    return v.plus_constant(Complex{norm.value_at_base} - at_base);
}

} // namespace

double neumann_from_dirichlet_disk(const BivariateLaurentExpr& phi, Complex z, const QuadratureConfig& quad)
{
    const TrigPolynomial trig = trig_from_boundary_data(phi);
    if (std::abs(trig.mean()) > 1e-10) {
        throw Error(ErrorCode::NonzeroMean,
                    "Dirichlet-to-Neumann on the disk needs zero-mean boundary data");
    }
    const double r = std::abs(z);
    if (r > 1.0 + 1e-12) {
        throw Error(ErrorCode::InvalidArgument, "point lies outside the closed unit disk");
    }
    if (r == 0.0) {
        return 0.0;
    }
    const double theta = std::arg(z);
    const double a0 = trig.mean();
    auto integrand = [&](double rho) {
        if (rho == 0.0) {
            // limit of U(rho z)/rho: the first harmonic
            const double a1 = trig.cos_coeffs.size() > 1 ? trig.cos_coeffs[1] : 0.0;
            const double b1 = trig.sin_coeffs.size() > 1 ? trig.sin_coeffs[1] : 0.0;
            return r * (a1 * std::cos(theta) + b1 * std::sin(theta));
        }
        return (fourier_dirichlet_solution(trig, rho * r, theta) - a0) / rho;
    };
    return integrate_real(integrand, 0.0, 1.0, quad);
}

HarmonicPair neumann_from_dirichlet_pair(const HarmonicPair& u, const BasePointNormalization& norm)
{
    require_unit_circle_base(norm);
    HarmonicPair v(antiderivative_over_arg(u.part_z()), antiderivative_over_arg(u.part_zeta()));
    return pinned(std::move(v), norm, std::conj(norm.z0));
}

HarmonicPair neumann_from_robin_pair(const HarmonicPair& w, const RobinParams& params,
                                     const BasePointNormalization& norm)
{
    params.validate();
    require_unit_circle_base(norm);
    HarmonicPair v(0.5 * params.b * w.part_z() + 0.5 * params.a * antiderivative_over_arg(w.part_z()),
                   0.5 * params.b * w.part_zeta() + 0.5 * params.a * antiderivative_over_arg(w.part_zeta()));
    return pinned(std::move(v), norm, std::conj(norm.z0));
}

HarmonicPair dirichlet_from_robin_pair(const HarmonicPair& w, const RobinParams& params)
{
    params.validate();
    auto part = [&](const LogLaurentExpr& e) {
        return 0.5 * params.a * e + 0.5 * params.b * differentiate(e).shifted(1);
    };
    return {part(w.part_z()), part(w.part_zeta())};
}

LogLaurentExpr solve_robin_analytic(const LogLaurentExpr& f, const LogLaurentExpr& g,
                                    const RobinParams& params)
{
    params.validate();
    const double a = params.a;
    const double b = params.b;
    const LogLaurentExpr rhs = differentiate(f).shifted(1) + g.with_cut(f.cut_angle());

    // Group right-hand side coefficients by power.
    std::map<int, std::map<int, Complex>> by_power;
    for (const auto& [key, c] : rhs.terms()) {
        by_power[key.first][key.second] = c;
    }

    LogLaurentExpr h(f.cut_angle());
    for (auto& [k, logs] : by_power) {
        const double lambda = a + b * k;
        const double scale = std::max({std::abs(a), std::abs(b), std::abs(b * k)});
        const double rel = std::abs(lambda) / scale;
        if (rel <= kResonantTol) {
            // b z d/dz [z^k L^{m+1}] = b (m+1) z^k L^m when a + b k = 0
            for (const auto& [m, c] : logs) {
                h.add_term(c / (b * (m + 1)), k, m + 1);
            }
            continue;
        }
        if (rel <= kIllConditionedTol) {
            throw Error(ErrorCode::UnsupportedResonance,
                        "a + b k = " + std::to_string(lambda) + " is nearly resonant for k = " +
                            std::to_string(k));
        }
        // (a + b k) c_m + b (m+1) c_{m+1} = r_m, solved from the top log power down
        const int top = logs.rbegin()->first;
        std::vector<Complex> r(static_cast<std::size_t>(top) + 1);
        for (const auto& [m, c] : logs) {
            r[static_cast<std::size_t>(m)] = c;
        }
        for (int m = top; m >= 0; --m) {
            const Complex cm = r[static_cast<std::size_t>(m)] / lambda;
            h.add_term(cm, k, m);
            if (m > 0) {
                r[static_cast<std::size_t>(m - 1)] -= b * static_cast<double>(m) * cm;
            }
        }
    }
    return h;
}

// ---------------------------------------------------------------------------
// Schwarz-map generalization

BasePointNormalization default_base_point(const SchwarzMap& map)
{
    return {map.nearest_boundary_point({1.0, 0.0}), 0.0};
}

SchwarzNeumannField::SchwarzNeumannField(HarmonicPair u, SchwarzMap map, BasePointNormalization norm,
                                         QuadratureConfig quad, int subdivision)
    : u_(std::move(u)), map_(std::move(map)), norm_(norm), quad_(quad), subdivision_(subdivision)
{
    quad_.validate();
    if (!map_.on_curve(norm_.z0, 1e-10)) {
        throw Error(ErrorCode::InvalidArgument, "base point must lie on the curve");
    }
    zeta0_ = map_.value(norm_.z0);
    // Fails early when S' vanishes or the sign check fails at the base point.
    validated_sqrt_derivative(map_, norm_.z0);
}

Complex SchwarzNeumannField::operator()(const BiPoint& p) const
{
    const Complex i{0.0, 1.0};
    Complex v = norm_.value_at_base;
    if (p.z != norm_.z0) {
        const PathSpec path_z = PathSpec::segment(p.z, norm_.z0, subdivision_);
        const ContinuedSqrt root = sqrt_schwarz_derivative(map_, path_z, norm_.z0);
        const auto& part = u_.part_z();
        v += i * integrate_path([&](Complex t) { return eval(part, t) * root.at(t); }, path_z, quad_);
    }
    if (p.zeta != zeta0_) {
        const PathSpec path_zeta = PathSpec::segment(p.zeta, zeta0_, subdivision_);
        const ContinuedSqrt root = sqrt_inverse_schwarz_derivative(map_, path_zeta, norm_.z0);
        const auto& part = u_.part_zeta();
        v -= i * integrate_path([&](Complex s) { return eval(part, s) * root.at(s); }, path_zeta, quad_);
    }
    return v;
}

Complex SchwarzNeumannField::value_along(const PathSpec& path_z, const PathSpec& path_zeta) const
{
    if (std::abs(path_z.to() - norm_.z0) > 1e-12 || std::abs(path_zeta.to() - zeta0_) > 1e-12) {
        throw Error(ErrorCode::InvalidArgument, "paths must end at the base point and its Schwarz image");
    }
    const Complex i{0.0, 1.0};
    const ContinuedSqrt root_z = sqrt_schwarz_derivative(map_, path_z, norm_.z0);
    const ContinuedSqrt root_zeta = sqrt_inverse_schwarz_derivative(map_, path_zeta, norm_.z0);
    const auto& pz = u_.part_z();
    const auto& pzeta = u_.part_zeta();
    return Complex{norm_.value_at_base} +
           i * integrate_path([&](Complex t) { return eval(pz, t) * root_z.at(t); }, path_z, quad_) -
           i * integrate_path([&](Complex s) { return eval(pzeta, s) * root_zeta.at(s); }, path_zeta, quad_);
}

SchwarzNeumannField neumann_from_dirichlet_schwarz(const HarmonicPair& u, const SchwarzMap& map,
                                                   std::optional<BasePointNormalization> norm,
                                                   const QuadratureConfig& quad)
{
    return SchwarzNeumannField(u, map, norm.value_or(default_base_point(map)), quad);
}

} // namespace harmonia
