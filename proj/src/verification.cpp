#include "harmonia/verification.hpp"

#include "harmonia/error.hpp"
#include "harmonia/examples.hpp"
#include "harmonia/numerics.hpp"
#include "harmonia/reflection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace harmonia {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Built from raw 64-bit draws so the stream is identical on every standard library.
    double uniform(double lo, double hi) { return lo + (hi - lo) * (static_cast<double>(gen_() >> 11) * 0x1.0p-53); }
    int integer(int lo, int hi) { return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    Complex unit_box() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }
    double sign() { return (gen_() & 1U) != 0U ? 1.0 : -1.0; }

private:
    std::mt19937_64 gen_;
};

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

struct Outcome {
    double residual = 0.0;
    int instances = 0;

    void add(double r)
    {
        residual = std::max(residual, std::isnan(r) ? std::numeric_limits<double>::infinity() : r);
    }
};

struct Context {
    const SuiteOptions& opts;
    const OperatorSet& ops;
};

using CheckFn = Outcome (*)(Rng&, const Context&);

struct CheckSpec {
    const char* name;
    const char* tag;
    double tolerance;
    CheckFn run;
};

double rel(Complex got, Complex want)
{
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

LogLaurentExpr random_expr(Rng& rng, int max_terms, int kmin, int kmax, int mmax, double cut = kDefaultCutAngle)
{
    LogLaurentExpr e(cut);
    const int n = rng.integer(1, max_terms);
    for (int j = 0; j < n; ++j) {
        e.add_term(rng.unit_box(), rng.integer(kmin, kmax), rng.integer(0, mmax));
    }
    return e;
}

BivariateLaurentExpr random_bivariate(Rng& rng, int max_terms, int kmax)
{
    BivariateLaurentExpr e;
    const int n = rng.integer(1, max_terms);
    for (int j = 0; j < n; ++j) {
        e.add_term(rng.unit_box(), rng.integer(-kmax, kmax), rng.integer(-kmax, kmax));
    }
    return e;
}

RobinParams random_params(Rng& rng)
{
    return RobinParams::make(rng.uniform(-2.0, 2.0), rng.sign() * rng.uniform(0.5, 2.0));
}

// Coefficientwise distance, relative to max(1, |coefficient|).
double coeff_residual(const LogLaurentExpr& lhs, const LogLaurentExpr& rhs)
{
    double worst = 0.0;
    auto scan = [&](const LogLaurentExpr& a, const LogLaurentExpr& b) {
        for (const auto& [key, c] : a.terms()) {
            const Complex d = b.coefficient(key.first, key.second);
            worst = std::max(worst, std::abs(c - d) / std::max({1.0, std::abs(c), std::abs(d)}));
        }
    };
    scan(lhs, rhs);
    scan(rhs, lhs);
    return worst;
}

// The Laurent part of a pair written as a function of (z, zeta). Log terms are
// dropped, so only use this for pairs whose logs vanish on the unit circle.
BivariateLaurentExpr as_bivariate(const HarmonicPair& h)
{
    BivariateLaurentExpr out;
    for (const auto& t : h.part_z().term_list()) {
        if (t.logpow == 0) {
            out.add_term(t.coeff, t.power, 0);
        }
    }
    for (const auto& t : h.part_zeta().term_list()) {
        if (t.logpow == 0) {
            out.add_term(t.coeff, 0, t.power);
        }
    }
    return out;
}

// Symmetric pair plus c ln r with real c; ln r vanishes on the unit circle.
HarmonicPair with_log_radius(const HarmonicPair& h, double c)
{
    return h + HarmonicPair::symmetric(LogLaurentExpr::monomial(0.5 * c, 0, 1));
}

SchwarzMap random_map(Rng& rng, int kind)
{
    switch (kind % 3) {
    case 0:
        return SchwarzMap::unit_circle();
    case 1:
        return SchwarzMap::circle(rng.unit_box(), rng.uniform(0.5, 2.0));
    default:
        return SchwarzMap::line(rng.unit_box(), rng.uniform(0.0, kPi));
    }
}

// A real-slice point at signed normal distance `offset` from a random point of Gamma.
Complex near_curve_point(Rng& rng, const SchwarzMap& map, double offset)
{
    const auto samples = map.sample_curve(64);
    const Complex b = samples[static_cast<std::size_t>(rng.integer(0, 63))];
    const double scale = map.kind() == SchwarzMap::Kind::Line ? 1.0 : map.radius();
    return b + offset * scale * map.outward_normal(b);
}

// Random symmetric pair with sum |c| = 1, for finite-difference checks whose
// truncation error scales with the field amplitude.
HarmonicPair unit_amplitude_pair(Rng& rng)
{
    const LogLaurentExpr e = random_expr(rng, 4, -2, 2, 1);
    double total = 0.0;
    for (const auto& [key, c] : e.terms()) {
        total += std::abs(c);
    }
    return HarmonicPair::symmetric(e * Complex{1.0 / total});
}

BiPoint random_annulus_point(Rng& rng, double rmin, double rmax, double tmax)
{
    return BiPoint::polar(rng.uniform(rmin, rmax), rng.uniform(-tmax, tmax));
}

// ---------------------------------------------------------------------------
// algebra

Outcome algebra_round_trip(Rng& rng, const Context&)
{
    Outcome out;
    for (int i = 0; i < 60; ++i) {
        const LogLaurentExpr e = random_expr(rng, 6, -4, 4, 2);
        out.add(coeff_residual(differentiate(antiderivative_over_arg(e)), e.shifted(-1)));
        ++out.instances;
    }
    return out;
}

Outcome algebra_eval_homomorphism(Rng& rng, const Context&)
{
    Outcome out;
    for (int i = 0; i < 50; ++i) {
        const LogLaurentExpr a = random_expr(rng, 4, -3, 3, 2);
        const LogLaurentExpr b = random_expr(rng, 4, -3, 3, 2);
        const Complex z = random_annulus_point(rng, 0.5, 1.5, 2.5).z;
        const Complex ea = eval(a, z);
        const Complex eb = eval(b, z);
        out.add(rel(eval(a * b, z), ea * eb));
        out.add(rel(eval(a + b, z), ea + eb));
        ++out.instances;
    }
    return out;
}

Outcome algebra_ray_restriction(Rng& rng, const Context&)
{
    Outcome out;
    for (int i = 0; i < 50; ++i) {
        const LogLaurentExpr e = random_expr(rng, 6, -4, 4, 2);
        const double theta = rng.uniform(-2.5, 2.5);
        const double rho = rng.uniform(0.5, 2.0);
        out.add(rel(eval(restrict_to_ray(e, theta), rho), eval(e, std::polar(rho, theta))));
        ++out.instances;
    }
    return out;
}

Outcome algebra_circle_restriction(Rng& rng, const Context&)
{
    Outcome out;
    for (int i = 0; i < 50; ++i) {
        const BivariateLaurentExpr phi = random_bivariate(rng, 5, 3);
        const Complex z = random_annulus_point(rng, 0.5, 1.5, kPi).z;
        out.add(rel(eval(restrict_bivariate_to_circle(phi), z), phi.eval(z, 1.0 / z)));
        ++out.instances;
    }
    return out;
}

// ---------------------------------------------------------------------------
// geometry

Outcome geometry_schwarz_identities(Rng& rng, const Context&)
{
    Outcome out;
    for (int i = 0; i < 51; ++i) {
        const SchwarzMap map = random_map(rng, i);
        for (const Complex b : map.sample_curve(8)) {
            out.add(map.curve_residual(b) / std::max(1.0, std::abs(b)));
        }
        const Complex z = near_curve_point(rng, map, rng.uniform(-0.5, 0.5));
        out.add(rel(map.inverse_value(map.value(z)), z));
        ++out.instances;
    }
    return out;
}

Outcome reflection_fixed_points(Rng& rng, const Context&)
{
    Outcome out;
    for (int i = 0; i < 51; ++i) {
        const SchwarzMap map = random_map(rng, i);
        for (const Complex b : map.sample_curve(8)) {
            const BiPoint p = BiPoint::real_slice(b);
            const BiPoint q = reflect_bipoint(map, p);
            out.add(std::max(rel(q.z, p.z), rel(q.zeta, p.zeta)));
        }
        // Involution, also off the real slice.
        const Complex z = near_curve_point(rng, map, rng.uniform(-0.5, 0.5));
        const BiPoint p{z, std::conj(z) + 0.1 * rng.unit_box()};
        const BiPoint back = reflect_bipoint(map, reflect_bipoint(map, p));
        out.add(std::max(rel(back.z, p.z), rel(back.zeta, p.zeta)));
        // On the unit circle the circle reflection formulas reduce to the identity.
        if (map.kind() == SchwarzMap::Kind::UnitCircle) {
            const HarmonicPair v = HarmonicPair::symmetric(random_expr(rng, 4, -3, 3, 1));
            const BivariateLaurentExpr phi = random_bivariate(rng, 4, 3);
            const double theta = rng.uniform(-2.5, 2.5);
            const ReflectionResult n = reflect_neumann_circle(v, phi, 1.0, theta);
            out.add(std::abs(n.correction));
            out.add(rel(n.value, eval_pair(v, n.reflected_point)));
            const ReflectionResult r = reflect_robin_circle(v, phi, random_params(rng), 1.0, theta);
            out.add(std::abs(r.correction));
        }
        ++out.instances;
    }
    return out;
}

// ---------------------------------------------------------------------------
// harmonic

Outcome harmonic_harmonicity(Rng& rng, const Context&)
{
    Outcome out;
    for (int i = 0; i < 50; ++i) {
        const HarmonicPair h = unit_amplitude_pair(rng);
        const BiPoint p = random_annulus_point(rng, 0.8, 1.25, 2.0);
        out.add(std::abs(fd_laplacian(real_field(h), p.z.real(), p.z.imag(), 1e-4)));
        ++out.instances;
    }
    return out;
}

Outcome harmonic_real_slice(Rng& rng, const Context&)
{
    Outcome out;
    for (int i = 0; i < 50; ++i) {
        const HarmonicPair h = HarmonicPair::symmetric(random_expr(rng, 6, -4, 4, 2));
        for (int j = 0; j < 10; ++j) {
            const Complex v = eval_pair(h, random_annulus_point(rng, 0.5, 1.5, 3.0));
            out.add(std::abs(v.imag()) / std::max(1.0, std::abs(v)));
        }
        ++out.instances;
    }
    return out;
}

Outcome harmonic_normal_derivative(Rng& rng, const Context&)
{
    Outcome out;
    for (int i = 0; i < 51; ++i) {
        const SchwarzMap map = random_map(rng, i);
        // Poles and logs at the origin are only safe against the unit circle.
        const bool unit = map.kind() == SchwarzMap::Kind::UnitCircle;
        const HarmonicPair h = unit ? HarmonicPair::symmetric(random_expr(rng, 5, -3, 3, 1))
                                    : HarmonicPair::symmetric(random_expr(rng, 5, 0, 3, 0));
        const Complex b = map.nearest_boundary_point(near_curve_point(rng, map, 0.0));
        if (unit && std::abs(std::arg(b)) > 3.0) {
            ++out.instances;
            continue;
        }
        const Complex n = map.outward_normal(b);
        const Complex direct = eval(differentiate(h.part_z()), b) * n +
                               eval(differentiate(h.part_zeta()), std::conj(b)) * std::conj(n);
        out.add(rel(normal_derivative_schwarz(h, map, b), direct));
        ++out.instances;
    }
    return out;
}

Outcome harmonic_robin_linearity(Rng& rng, const Context&)
{
    Outcome out;
    for (int i = 0; i < 50; ++i) {
        const HarmonicPair h1 = HarmonicPair::symmetric(random_expr(rng, 4, -3, 3, 1));
        const HarmonicPair h2 = HarmonicPair::symmetric(random_expr(rng, 4, -3, 3, 1));
        const Complex s = rng.unit_box();
        const RobinParams params = random_params(rng);
        const double theta = rng.uniform(-2.5, 2.5);
        const Complex lhs = robin_trace_circle(h1 + s * h2, params, theta);
        const Complex rhs = robin_trace_circle(h1, params, theta) + s * robin_trace_circle(h2, params, theta);
        out.add(rel(lhs, rhs));
        ++out.instances;
    }
    return out;
}

// ---------------------------------------------------------------------------
// operators

std::vector<double> boundary_angles()
{
    std::vector<double> out;
    for (int j = 0; j < 32; ++j) {
        out.push_back(-kPi + (j + 0.5) * 2.0 * kPi / 32.0);
    }
    return out;
}

Outcome operators_dtn_boundary(Rng& rng, const Context& ctx)
{
    Outcome out;
    const auto angles = boundary_angles();
    for (int i = 0; i < 50; ++i) {
        const HarmonicPair u = HarmonicPair::symmetric(random_expr(rng, 6, -4, 4, 2));
        const HarmonicPair v = ctx.ops.dirichlet_to_neumann(u, {});
        for (double t : angles) {
            const BiPoint p = BiPoint::polar(1.0, t);
            out.add(rel(radial_derivative(v, p, t), eval_pair(u, p)));
        }
        ++out.instances;
    }
    return out;
}

Outcome operators_rtn_boundary(Rng& rng, const Context& ctx)
{
    Outcome out;
    const auto angles = boundary_angles();
    for (int i = 0; i < 50; ++i) {
        const HarmonicPair w = HarmonicPair::symmetric(random_expr(rng, 6, -4, 4, 2));
        const RobinParams params = random_params(rng);
        const HarmonicPair v = ctx.ops.robin_to_neumann(w, params, {});
        for (double t : angles) {
            const BiPoint p = BiPoint::polar(1.0, t);
            out.add(rel(radial_derivative(v, p, t), 0.5 * robin_trace_circle(w, params, t)));
        }
        ++out.instances;
    }
    return out;
}

Outcome operators_dfr_trace(Rng& rng, const Context& ctx)
{
    Outcome out;
    const auto angles = boundary_angles();
    for (int i = 0; i < 50; ++i) {
        const HarmonicPair w = HarmonicPair::symmetric(random_expr(rng, 6, -4, 4, 2));
        const RobinParams params = random_params(rng);
        const HarmonicPair u = ctx.ops.dirichlet_from_robin(w, params);
        for (double t : angles) {
            out.add(rel(eval_pair(u, BiPoint::polar(1.0, t)), 0.5 * robin_trace_circle(w, params, t)));
        }
        ++out.instances;
    }
    return out;
}

Outcome operators_corollary_chain(Rng& rng, const Context& ctx)
{
    Outcome out;
    for (int i = 0; i < 20; ++i) {
        const HarmonicPair w = HarmonicPair::symmetric(random_expr(rng, 6, -4, 4, 2));
        const RobinParams params = random_params(rng);
        const HarmonicPair chained = ctx.ops.dirichlet_to_neumann(ctx.ops.dirichlet_from_robin(w, params), {});
        const HarmonicPair direct = ctx.ops.robin_to_neumann(w, params, {});
        std::vector<Complex> diffs;
        for (int a = 0; a < 5; ++a) {
            for (int b = 0; b < 5; ++b) {
                const BiPoint p = BiPoint::polar(0.6 + 0.2 * a, -2.0 + b);
                diffs.push_back(eval_pair(chained, p) - eval_pair(direct, p));
            }
        }
        Complex mean{};
        for (Complex d : diffs) {
            mean += d;
        }
        mean /= static_cast<double>(diffs.size());
        double var = 0.0;
        for (Complex d : diffs) {
            var += std::norm(d - mean);
        }
        out.add(var / static_cast<double>(diffs.size()));
        ++out.instances;
    }
    return out;
}

Outcome operators_robin_ode(Rng& rng, const Context&)
{
    Outcome out;
    for (int i = 0; i < 50; ++i) {
        const LogLaurentExpr f = random_expr(rng, 4, -3, 3, 2);
        const LogLaurentExpr g = random_expr(rng, 4, -3, 3, 2);
        const LogLaurentExpr rhs = differentiate(f).shifted(1) + g;
        RobinParams params = random_params(rng);
        if (i % 5 == 0) {
            // Force resonance at one of the right-hand side powers.
            const auto terms = rhs.term_list();
            const int k = terms[static_cast<std::size_t>(rng.integer(0, static_cast<int>(terms.size()) - 1))].power;
            params = RobinParams::make(-params.b * k, params.b);
        } else {
            // Stay clear of resonance: near it the particular solution is
            // ill-conditioned and the identity only holds to ~eps/|a+bk|^3.
            auto near = [&] {
                return std::any_of(rhs.terms().begin(), rhs.terms().end(), [&](const auto& kv) {
                    return std::abs(params.a + params.b * kv.first.first) < 0.1;
                });
            };
            while (near()) {
                params.a += 0.37;
            }
        }
        const LogLaurentExpr h = solve_robin_analytic(f, g, params);
        const LogLaurentExpr lhs = params.a * h + params.b * differentiate(h).shifted(1);
        // Scale each coefficient by the size of the terms that cancel into it:
        // a h_{k,m} + b k h_{k,m} + b (m+1) h_{k,m+1}.
        const LogLaurentExpr diff = lhs - rhs;
        for (const auto& [key, d] : diff.terms()) {
            const auto [k, m] = key;
            const double scale = std::max({1.0, std::abs(rhs.coefficient(k, m)),
                                           std::abs(params.a * h.coefficient(k, m)) +
                                               std::abs(params.b * k * h.coefficient(k, m)) +
                                               std::abs(params.b * (m + 1) * h.coefficient(k, m + 1))});
            out.add(std::abs(d) / scale);
        }
        ++out.instances;
    }
    return out;
}

TrigPolynomial random_trig(Rng& rng, double mean)
{
    TrigPolynomial t;
    const int degree = rng.integer(1, 6);
    t.cos_coeffs.assign(static_cast<std::size_t>(degree) + 1, 0.0);
    t.sin_coeffs.assign(static_cast<std::size_t>(degree) + 1, 0.0);
    t.cos_coeffs[0] = mean;
    for (int n = 1; n <= degree; ++n) {
        t.cos_coeffs[static_cast<std::size_t>(n)] = rng.uniform(-1.0, 1.0);
        t.sin_coeffs[static_cast<std::size_t>(n)] = rng.uniform(-1.0, 1.0);
    }
    return t;
}

Outcome operators_disk_oracle(Rng& rng, const Context&)
{
    Outcome out;
    for (int i = 0; i < 50; ++i) {
        const TrigPolynomial trig = random_trig(rng, 0.0);
        const double r = rng.uniform(0.0, 0.95);
        const double t = rng.uniform(-kPi, kPi);
        const double got = neumann_from_dirichlet_disk(boundary_data_from_trig(trig), std::polar(r, t));
        out.add(std::abs(got - fourier_neumann_oracle(trig, r, t)));
        ++out.instances;
    }
    return out;
}

Outcome operators_disk_nonzero_mean(Rng& rng, const Context&)
{
    Outcome out;
    for (int i = 0; i < 50; ++i) {
        const TrigPolynomial trig = random_trig(rng, rng.sign() * rng.uniform(0.01, 1.0));
        double missed = 1.0;
        try {
            neumann_from_dirichlet_disk(boundary_data_from_trig(trig), {0.3, 0.2});
        } catch (const Error& e) {
            missed = e.code() == ErrorCode::NonzeroMean ? 0.0 : 1.0;
        }
        out.add(missed);
        ++out.instances;
    }
    return out;
}

Outcome operators_harmonicity(Rng& rng, const Context& ctx)
{
    Outcome out;
    for (int i = 0; i < 50; ++i) {
        const HarmonicPair u = unit_amplitude_pair(rng);
        const HarmonicPair v = ctx.ops.dirichlet_to_neumann(u, {});
        const BiPoint p = random_annulus_point(rng, 0.8, 1.25, 2.0);
        out.add(std::abs(fd_laplacian(real_field(v), p.z.real(), p.z.imag(), 1e-4)));
        ++out.instances;
    }
    return out;
}

// ---------------------------------------------------------------------------
// numerics

Outcome numerics_oracle_agreement(Rng& rng, const Context& ctx)
{
    Outcome out;
    for (int i = 0; i < 50; ++i) {
        const TrigPolynomial trig = random_trig(rng, 0.0);
        const HarmonicPair v = ctx.ops.dirichlet_to_neumann(harmonic_extension(trig), {});
        const double r = rng.uniform(0.1, 1.0);
        const double t = rng.uniform(-3.0, 3.0);
        const double want = fourier_neumann_oracle(trig, r, t) - fourier_neumann_oracle(trig, 1.0, 0.0);
        out.add(std::abs(eval_pair(v, BiPoint::polar(r, t)) - want));
        ++out.instances;
    }
    return out;
}

Outcome numerics_quadrature_vs_exact(Rng& rng, const Context&)
{
    Outcome out;
    for (int i = 0; i < 50; ++i) {
        const LogLaurentExpr e = random_expr(rng, 6, -4, 4, 2);
        const double t = rng.uniform(-2.5, 2.5);
        const double r1 = rng.uniform(0.5, 2.0);
        double r2 = rng.uniform(0.5, 2.0);
        if (std::abs(r2 - r1) < 1e-3) {
            r2 = r1 + 0.5;
        }
        const LogLaurentExpr a = antiderivative_over_arg(e);
        const Complex exact = eval(a, std::polar(r2, t)) - eval(a, std::polar(r1, t));
        const Complex numeric =
            integrate_path([&](Complex tau) { return eval(e, tau) / tau; }, PathSpec::radial_ray(t, r1, r2, 2));
        out.add(rel(numeric, exact));
        ++out.instances;
    }
    return out;
}

Outcome numerics_fd_scaling(Rng& rng, const Context&)
{
    Outcome out;
    for (int i = 0; i < 50; ++i) {
        const HarmonicPair h = unit_amplitude_pair(rng);
        const auto field = real_field(h);
        const BiPoint p = random_annulus_point(rng, 0.8, 1.25, 2.0);
        for (double step : {5e-4, 2e-4}) {
            out.add(std::abs(fd_laplacian(field, p.z.real(), p.z.imag(), step)));
        }
        ++out.instances;
    }
    return out;
}

// ---------------------------------------------------------------------------
// reflection

Outcome reflection_dirichlet_identity(Rng& rng, const Context&)
{
    Outcome out;
    for (int i = 0; i < 51; ++i) {
        const SchwarzMap map = random_map(rng, i);
        const bool unit = map.kind() == SchwarzMap::Kind::UnitCircle;
        const HarmonicPair u = HarmonicPair::symmetric(random_expr(rng, 5, unit ? -3 : 0, 3, 0));
        const BivariateLaurentExpr phi = as_bivariate(u);
        const BiPoint p = BiPoint::real_slice(near_curve_point(rng, map, -rng.uniform(0.1, 0.4)));
        const ReflectionResult res = reflect_dirichlet_study(u, phi, map, p);
        out.add(rel(res.value, eval_pair(u, res.reflected_point)));
        ++out.instances;
    }
    return out;
}

Outcome reflection_extension_independence(Rng& rng, const Context&)
{
    Outcome out;
    const BivariateLaurentExpr defining{{{1.0, 0.0}, 1, 1}, {{-1.0, 0.0}, 0, 0}};
    for (int i = 0; i < 50; ++i) {
        const BivariateLaurentExpr phi = random_bivariate(rng, 4, 3);
        const BivariateLaurentExpr extended = phi + defining * random_bivariate(rng, 3, 2);
        const HarmonicPair v = HarmonicPair::symmetric(random_expr(rng, 4, -3, 3, 1));
        const double r = rng.uniform(0.5, 0.95);
        const double t = rng.uniform(-2.5, 2.5);
        const ReflectionResult a = reflect_neumann_circle(v, phi, r, t);
        const ReflectionResult b = reflect_neumann_circle(v, extended, r, t);
        out.add(rel(b.correction, a.correction));
        const RobinParams params = random_params(rng);
        const ReflectionResult c = reflect_robin_circle(v, phi, params, r, t);
        const ReflectionResult d = reflect_robin_circle(v, extended, params, r, t);
        out.add(rel(d.correction, c.correction));
        const BiPoint p = BiPoint::polar(r, t);
        const ReflectionResult e = reflect_dirichlet_study(v, phi, SchwarzMap::unit_circle(), p);
        const ReflectionResult f = reflect_dirichlet_study(v, extended, SchwarzMap::unit_circle(), p);
        out.add(rel(f.correction, e.correction));
        ++out.instances;
    }
    return out;
}

Outcome reflection_neumann_pipeline(Rng& rng, const Context& ctx)
{
    Outcome out;
    for (int i = 0; i < 50; ++i) {
        const HarmonicPair base = HarmonicPair::symmetric(random_expr(rng, 5, -3, 3, 0));
        const HarmonicPair u = with_log_radius(base, rng.uniform(-1.0, 1.0));
        const HarmonicPair v = ctx.ops.dirichlet_to_neumann(u, {});
        const double r = rng.uniform(0.5, 0.95);
        const double t = rng.uniform(-2.0, 2.0);
        const ReflectionResult res = reflect_neumann_circle(v, as_bivariate(base), r, t);
        out.add(rel(res.value, eval_pair(v, res.reflected_point)));
        ++out.instances;
    }
    return out;
}

Outcome reflection_robin_pipeline(Rng& rng, const Context&)
{
    Outcome out;
    for (int i = 0; i < 50; ++i) {
        const HarmonicPair base = HarmonicPair::symmetric(random_expr(rng, 5, -3, 3, 0));
        const double log_coeff = rng.uniform(-1.0, 1.0);
        const HarmonicPair w = with_log_radius(base, log_coeff);
        const RobinParams params = random_params(rng);
        // a w + b dw/dr on the circle, term by term.
        BivariateLaurentExpr data = BivariateLaurentExpr::constant(params.b * log_coeff);
        for (const auto& t : base.part_z().term_list()) {
            data.add_term((params.a + params.b * t.power) * t.coeff, t.power, 0);
        }
        for (const auto& t : base.part_zeta().term_list()) {
            data.add_term((params.a + params.b * t.power) * t.coeff, 0, t.power);
        }
        const double r = rng.uniform(0.5, 0.95);
        const double t = rng.uniform(-2.0, 2.0);
        const ReflectionResult res = reflect_robin_circle(w, data, params, r, t);
        out.add(rel(res.value, eval_pair(w, res.reflected_point)));
        ++out.instances;
    }
    return out;
}

Outcome reflection_homogeneous_parity(Rng& rng, const Context&)
{
    Outcome out;
    for (int i = 0; i < 50; ++i) {
        // P(z) + P*(zeta) with P*(zeta) = sum c_k zeta^{-k} has zero normal
        // derivative on the circle; P(z) - P*(zeta) vanishes there.
        const LogLaurentExpr p = random_expr(rng, 4, -3, 3, 0);
        LogLaurentExpr q(2.0 * kPi - kDefaultCutAngle);
        for (const auto& t : p.term_list()) {
            q.add_term(t.coeff, -t.power, 0);
        }
        const HarmonicPair even(p, q);
        const HarmonicPair odd(p, -q);
        const double r = rng.uniform(0.5, 0.95);
        const double t = rng.uniform(-3.0, 3.0);
        const ReflectionResult n = reflect_neumann_circle(even, {}, r, t);
        out.add(rel(n.value, eval_pair(even, n.reflected_point)));
        const ReflectionResult d =
            reflect_dirichlet_study(odd, {}, SchwarzMap::unit_circle(), BiPoint::polar(r, t));
        out.add(rel(d.value, eval_pair(odd, d.reflected_point)));
        ++out.instances;
    }
    return out;
}

// ---------------------------------------------------------------------------
// general arcs

Outcome schwarz_circle_reduction(Rng& rng, const Context&)
{
    Outcome out;
    const SchwarzMap unit = SchwarzMap::unit_circle();
    for (int i = 0; i < 20; ++i) {
        const HarmonicPair u = HarmonicPair::symmetric(random_expr(rng, 4, -3, 3, 0));
        const SchwarzNeumannField field = neumann_from_dirichlet_schwarz(u, unit);
        const HarmonicPair exact = neumann_from_dirichlet_pair(u);
        const double r = rng.uniform(0.6, 0.95);
        const double t = rng.uniform(-2.0, 2.0);
        const BiPoint p = BiPoint::polar(r, t);
        out.add(rel(field(p), eval_pair(exact, p)));
        const BivariateLaurentExpr phi = as_bivariate(u);
        const ReflectionResult general = reflect_neumann_schwarz(exact, phi, unit, p);
        const ReflectionResult circle = reflect_neumann_circle(exact, phi, r, t);
        out.add(rel(general.correction, circle.correction));
        ++out.instances;
    }
    return out;
}

Outcome schwarz_rescaled_circle(Rng& rng, const Context&)
{
    Outcome out;
    const SchwarzMap map = SchwarzMap::circle({0.0, 0.0}, 2.0);
    const FieldFn zero = [](const BiPoint&) { return Complex{}; };
    for (int i = 0; i < 20; ++i) {
        const double c = rng.uniform(-2.0, 2.0);
        const double r = rng.uniform(1.2, 1.9);
        const double t = rng.uniform(-2.5, 2.5);
        // V(w) = v(2w) has Neumann data 2C on the unit circle.
        const double want = -2.0 * (2.0 * c) * std::log(r / 2.0);
        const ReflectionResult res =
            reflect_neumann_schwarz(zero, BivariateLaurentExpr::constant(c), map, BiPoint::polar(r, t));
        out.add(rel(res.correction, want));
        ++out.instances;
    }
    return out;
}

Outcome schwarz_half_plane(Rng& rng, const Context&)
{
    Outcome out;
    for (int i = 0; i < 20; ++i) {
        const SchwarzMap map = SchwarzMap::line(rng.unit_box(), rng.uniform(0.0, 2.0 * kPi));
        const double c = rng.uniform(-2.0, 2.0);
        const Complex n = map.outward_normal(map.point());
        // v = C Re(conj(n)(z - p)) has normal derivative C and is odd across the line.
        const FieldFn v = [&](const BiPoint& q) {
            return c * 0.5 * (std::conj(n) * (q.z - map.point()) + n * (q.zeta - std::conj(map.point())));
        };
        const BiPoint p = BiPoint::real_slice(near_curve_point(rng, map, rng.sign() * rng.uniform(0.1, 1.0)));
        const ReflectionResult res = reflect_neumann_schwarz(v, BivariateLaurentExpr::constant(c), map, p);
        out.add(rel(res.value, v(res.reflected_point)));
        ++out.instances;
    }
    return out;
}

const std::vector<CheckSpec>& catalogue()
{
    static const std::vector<CheckSpec> specs{
        {"algebra.antiderivative_round_trip", "exact", 64 * kEps, algebra_round_trip},
        {"algebra.eval_homomorphism", "exact", 1e-12, algebra_eval_homomorphism},
        {"algebra.ray_restriction", "exact", 1e-12, algebra_ray_restriction},
        {"algebra.circle_restriction", "exact", 1e-12, algebra_circle_restriction},
        {"geometry.schwarz_identities", "property", 1e-11, geometry_schwarz_identities},
        {"harmonic.harmonicity", "property", 1e-5, harmonic_harmonicity},
        {"harmonic.real_slice", "property", 1e-11, harmonic_real_slice},
        {"harmonic.normal_derivative", "property", 1e-10, harmonic_normal_derivative},
        {"harmonic.robin_linearity", "property", 1e-12, harmonic_robin_linearity},
        {"operators.dtn_boundary_recovery", "property", 1e-10, operators_dtn_boundary},
        {"operators.rtn_boundary_recovery", "property", 1e-10, operators_rtn_boundary},
        {"operators.dfr_trace", "property", 1e-10, operators_dfr_trace},
        {"operators.corollary_chain", "property", 1e-18, operators_corollary_chain},
        {"operators.robin_ode_identity", "exact", 1e-12, operators_robin_ode},
        {"operators.disk_oracle", "oracle", 1e-8, operators_disk_oracle},
        {"operators.disk_nonzero_mean_rejected", "property", 0.0, operators_disk_nonzero_mean},
        {"operators.harmonicity_preserved", "property", 1e-5, operators_harmonicity},
        {"numerics.oracle_agreement", "oracle", 1e-8, numerics_oracle_agreement},
        {"numerics.quadrature_vs_exact", "oracle", 1e-9, numerics_quadrature_vs_exact},
        {"numerics.fd_scaling", "property", 1e-4, numerics_fd_scaling},
        {"reflection.fixed_points", "property", 1e-11, reflection_fixed_points},
        {"reflection.dirichlet_identity", "property", 1e-10, reflection_dirichlet_identity},
        {"reflection.extension_independence", "property", 1e-12, reflection_extension_independence},
        {"reflection.neumann_pipeline", "property", 1e-10, reflection_neumann_pipeline},
        {"reflection.robin_pipeline", "property", 1e-10, reflection_robin_pipeline},
        {"reflection.homogeneous_parity", "property", 1e-12, reflection_homogeneous_parity},
        {"schwarz.circle_reduction", "oracle", 1e-9, schwarz_circle_reduction},
        {"schwarz.rescaled_circle", "oracle", 1e-9, schwarz_rescaled_circle},
        {"schwarz.half_plane", "oracle", 1e-9, schwarz_half_plane},
    };
    return specs;
}

bool selected(const SuiteOptions& opts, const std::string& name)
{
    if (!opts.select) {
        return true;
    }
    return std::any_of(opts.select->begin(), opts.select->end(),
                       [&](const std::string& prefix) { return name.rfind(prefix, 0) == 0; });
}

CheckRecord failed_record(std::string name, std::string tag, double tol, const std::exception& e)
{
    CheckRecord rec;
    rec.name = std::move(name);
    rec.tag = std::move(tag);
    rec.tolerance = tol;
    rec.max_residual = std::numeric_limits<double>::infinity();
    rec.error = e.what();
    return rec;
}

} // namespace

int VerificationReport::passed() const
{
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; }));
}

int VerificationReport::failed() const
{
    return static_cast<int>(checks.size()) - passed();
}

OperatorSet OperatorSet::standard()
{
    OperatorSet ops;
    ops.dirichlet_to_neumann = [](const HarmonicPair& u, const BasePointNormalization& n) {
        return neumann_from_dirichlet_pair(u, n);
    };
    ops.robin_to_neumann = [](const HarmonicPair& w, const RobinParams& p, const BasePointNormalization& n) {
        return neumann_from_robin_pair(w, p, n);
    };
    ops.dirichlet_from_robin = [](const HarmonicPair& w, const RobinParams& p) {
        return dirichlet_from_robin_pair(w, p);
    };
    return ops;
}

std::vector<std::string> verification_catalogue()
{
    std::vector<std::string> names;
    for (const auto& spec : catalogue()) {
        names.emplace_back(spec.name);
    }
    return names;
}

VerificationReport run_verification_suite(const SuiteOptions& opts)
{
    VerificationReport report;
    report.seed = opts.seed;
    const Context ctx{opts, opts.ops};

    for (const auto& spec : catalogue()) {
        if (!selected(opts, spec.name)) {
            continue;
        }
        Rng rng(opts.seed ^ fnv1a(spec.name));
        try {
            const Outcome o = spec.run(rng, ctx);
            CheckRecord rec;
            rec.name = spec.name;
            rec.tag = spec.tag;
            rec.tolerance = spec.tolerance;
            rec.max_residual = o.residual;
            rec.instances = o.instances;
            rec.pass = o.residual <= spec.tolerance;
            report.checks.push_back(std::move(rec));
        } catch (const std::exception& e) {
            report.checks.push_back(failed_record(spec.name, spec.tag, spec.tolerance, e));
        }
    }

    if (opts.fixture) {
        ExampleOptions eo;
        eo.tolerance = opts.golden_tolerance;
        eo.cut_angle = opts.cut_angle;
        // A malformed fixture is an input error, not a failed check.
        for (const ExampleRow& row : run_examples(*opts.fixture, eo)) {
            const std::string name = "golden." + row.id;
            if (selected(opts, name)) {
                CheckRecord rec;
                rec.name = name;
                rec.tag = "golden";
                rec.tolerance = row.tolerance;
                rec.max_residual = row.max_residual;
                rec.instances = row.points;
                rec.pass = row.max_residual <= row.tolerance;
                report.checks.push_back(std::move(rec));
            }
            if (row.shadow_residual && selected(opts, name + ".quadrature")) {
                CheckRecord rec;
                rec.name = name + ".quadrature";
                rec.tag = "oracle";
                rec.tolerance = row.shadow_tolerance;
                rec.max_residual = *row.shadow_residual;
                rec.instances = row.points;
                rec.pass = rec.max_residual <= rec.tolerance;
                report.checks.push_back(std::move(rec));
            }
        }
    }
    return report;
}

Json to_json(const VerificationReport& report)
{
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json rec = {{"name", c.name},
                    {"tag", c.tag},
                    {"max_residual", std::isfinite(c.max_residual) ? Json(c.max_residual) : Json(nullptr)},
                    {"tolerance", c.tolerance},
                    {"pass", c.pass},
                    {"instances", c.instances}};
        if (!c.error.empty()) {
            rec["error"] = c.error;
        }
        checks.push_back(std::move(rec));
    }
    return {{"seed", report.seed},
            {"checks", std::move(checks)},
            {"passed", report.passed()},
            {"failed", report.failed()}};
}

} // namespace harmonia
