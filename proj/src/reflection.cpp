#include "harmonia/reflection.hpp"

#include "harmonia/error.hpp"

#include <cmath>

namespace harmonia {

std::string_view formula_name(ReflectionFormula f) noexcept
{
    switch (f) {
    case ReflectionFormula::DirichletStudy:
        return "dirichlet";
    case ReflectionFormula::NeumannCircle:
        return "neumann";
    case ReflectionFormula::RobinCircle:
        return "robin";
    case ReflectionFormula::NeumannSchwarz:
        return "schwarz";
    }
    return "unknown";
}

ReflectionResult reflect_dirichlet_study(const FieldFn& u, const BivariateLaurentExpr& phi,
                                         const SchwarzMap& map, const BiPoint& p)
{
    ReflectionResult out;
    out.formula = ReflectionFormula::DirichletStudy;
    out.point = p;
    out.reflected_point = reflect_bipoint(map, p);
    // Both phi arguments lie on the complexified curve.
    out.correction = phi.eval(out.reflected_point.z, p.zeta) + phi.eval(p.z, out.reflected_point.zeta);
    out.value = out.correction - u(p);
    return out;
}

ReflectionResult reflect_dirichlet_study(const HarmonicPair& u, const BivariateLaurentExpr& phi,
                                         const SchwarzMap& map, const BiPoint& p)
{
    return reflect_dirichlet_study([&u](const BiPoint& q) { return eval_pair(u, q); }, phi, map, p);
}

Complex circle_data_integral(const BivariateLaurentExpr& phi, double r, double theta, double cut_margin)
{
    if (!(r > 0.0)) {
        throw Error(ErrorCode::Domain, "reflection radius must be positive");
    }
    const LogLaurentExpr on_ray = restrict_to_ray(restrict_bivariate_to_circle(phi), theta, cut_margin);
    return integrate_over_arg(on_ray, 1.0 / r, r);
}

ReflectionResult reflect_neumann_circle(const HarmonicPair& v, const BivariateLaurentExpr& phi,
                                        double r, double theta, double cut_margin)
{
    ReflectionResult out;
    out.formula = ReflectionFormula::NeumannCircle;
    out.point = BiPoint::polar(r, theta);
    out.reflected_point = BiPoint::polar(1.0 / r, theta);
    out.correction = -circle_data_integral(phi, r, theta, cut_margin);
    out.value = eval_pair(v, out.point, cut_margin) + out.correction;
    return out;
}

ReflectionResult reflect_neumann_circle(const HarmonicPair& v, const BivariateLaurentExpr& phi,
                                        const BiPoint& p, double cut_margin)
{
    if (!p.is_real_slice(1e-12)) {
        throw Error(ErrorCode::InvalidArgument, "circle reflection needs a real-slice point");
    }
    return reflect_neumann_circle(v, phi, std::abs(p.z), std::arg(p.z), cut_margin);
}

ReflectionResult reflect_robin_circle(const HarmonicPair& w, const BivariateLaurentExpr& phi_w,
                                      const RobinParams& params, double r, double theta, double cut_margin)
{
    params.validate();
    ReflectionResult out;
    out.formula = ReflectionFormula::RobinCircle;
    out.point = BiPoint::polar(r, theta);
    out.reflected_point = BiPoint::polar(1.0 / r, theta);

    out.data_correction = -circle_data_integral(phi_w, r, theta, cut_margin) / params.b;

    // w(rho e^{it}) as an expression in rho, and w(e^{it}/rho) by rho -> 1/rho.
    const LogLaurentExpr along = restrict_to_ray(w.part_z(), theta, cut_margin) +
                                 restrict_to_ray(w.part_zeta(), -theta, cut_margin);
    const LogLaurentExpr mirrored = along.reciprocal_argument();
    out.self_correction = -(params.a / params.b) * integrate_over_arg(along + mirrored, r, 1.0);

    out.correction = out.data_correction + out.self_correction;
    out.value = eval_pair(w, out.point, cut_margin) + out.correction;
    return out;
}

Complex schwarz_data_integral(const BivariateLaurentExpr& phi, const SchwarzMap& map, const BiPoint& p,
                              const QuadratureConfig& quad)
{
    const Complex start = map.inverse_value(p.zeta);
    const Complex end = p.z;
    if (std::abs(end - start) <= 1e-14 * std::max(1.0, std::abs(end))) {
        return {};
    }
    const PathSpec path = PathSpec::segment(start, end, 4);
    const Complex anchor = map.nearest_boundary_point(0.5 * (start + end));
    const ContinuedSqrt root = sqrt_schwarz_derivative(map, path, anchor);
    const Complex i{0.0, 1.0};
    return i * integrate_path([&](Complex t) { return phi.eval(t, map.value(t)) * root.at(t); }, path, quad);
}

ReflectionResult reflect_neumann_schwarz(const FieldFn& v, const BivariateLaurentExpr& phi,
                                         const SchwarzMap& map, const BiPoint& p,
                                         const QuadratureConfig& quad)
{
    ReflectionResult out;
    out.formula = ReflectionFormula::NeumannSchwarz;
    out.point = p;
    out.reflected_point = reflect_bipoint(map, p);
    out.correction = schwarz_data_integral(phi, map, p, quad);
    out.value = v(p) + out.correction;
    return out;
}

ReflectionResult reflect_neumann_schwarz(const HarmonicPair& v, const BivariateLaurentExpr& phi,
                                         const SchwarzMap& map, const BiPoint& p,
                                         const QuadratureConfig& quad)
{
    return reflect_neumann_schwarz([&v](const BiPoint& q) { return eval_pair(v, q); }, phi, map, p, quad);
}

} // namespace harmonia
