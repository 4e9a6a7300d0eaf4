#include "harmonia/numerics.hpp"

#include "harmonia/error.hpp"
#include "harmonia/harmonic.hpp"

#include <cmath>
#include <string>

namespace harmonia {

namespace {

constexpr double kMeanTol = 1e-10;
constexpr double kRealTol = 1e-10;

template <typename T, typename F>
T simpson_step(const F& f, double a, T fa, double m, T fm, double b, T fb, T whole, double tol,
               int depth, int max_depth)
{
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const T flm = f(lm);
    const T frm = f(rm);
    const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const T delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    if (depth >= max_depth) {
        throw Error(ErrorCode::Nonconvergence,
                    "adaptive Simpson did not converge within depth " + std::to_string(max_depth));
    }
    return simpson_step(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1, max_depth) +
           simpson_step(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1, max_depth);
}

template <typename T, typename F>
T adaptive_simpson(const F& f, double a, double b, double tol, int max_depth)
{
    const double m = 0.5 * (a + b);
    const T fa = f(a);
    const T fm = f(m);
    const T fb = f(b);
    const T whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, fa, m, fm, b, fb, whole, tol, 1, max_depth);
}

void require_finite(Complex v)
{
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw Error(ErrorCode::Domain, "integrand is not finite on the path");
    }
}

} // namespace

void QuadratureConfig::validate() const
{
    if (!(abs_tol > 0.0) || max_depth < 1) {
        throw Error(ErrorCode::InvalidArgument, "quadrature needs abs_tol > 0 and max_depth >= 1");
    }
}

Complex integrate_path(const ComplexFn& f, const PathSpec& path, const QuadratureConfig& cfg)
{
    cfg.validate();
    path.validate();
    const Complex velocity = path.velocity();
    auto integrand = [&](double t) {
        const Complex v = f(path.at(t)) * velocity;
        require_finite(v);
        return v;
    };
    const int panels = path.subdivision;
    Complex total{};
    for (int j = 0; j < panels; ++j) {
        const double a = static_cast<double>(j) / panels;
        const double b = static_cast<double>(j + 1) / panels;
        total += adaptive_simpson<Complex>(integrand, a, b, cfg.abs_tol / panels, cfg.max_depth);
    }
    return total;
}

double integrate_real(const RealFn& f, double a, double b, const QuadratureConfig& cfg)
{
    cfg.validate();
    if (a == b) {
        return 0.0;
    }
    auto integrand = [&](double x) {
        const double v = f(x);
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::Domain, "integrand is not finite");
        }
        return v;
    };
    return adaptive_simpson<double>(integrand, a, b, cfg.abs_tol, cfg.max_depth);
}

double fd_laplacian(const RealField& field, double x, double y, double h)
{
    if (!(h > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "finite-difference step must be positive");
    }
    const double centre = field(x, y);
    return (field(x + h, y) + field(x - h, y) + field(x, y + h) + field(x, y - h) - 4.0 * centre) /
           (h * h);
}

int TrigPolynomial::degree() const
{
    const auto n = std::max(cos_coeffs.size(), sin_coeffs.size());
    return n == 0 ? 0 : static_cast<int>(n) - 1;
}

double TrigPolynomial::eval(double theta) const
{
    double sum = 0.0;
    for (std::size_t n = 0; n < cos_coeffs.size(); ++n) {
        sum += cos_coeffs[n] * std::cos(static_cast<double>(n) * theta);
    }
    for (std::size_t n = 1; n < sin_coeffs.size(); ++n) {
        sum += sin_coeffs[n] * std::sin(static_cast<double>(n) * theta);
    }
    return sum;
}

TrigPolynomial trig_from_boundary_data(const BivariateLaurentExpr& phi)
{
    // On the circle c z^k zeta^m = c e^{i (k - m) theta}.
    const LogLaurentExpr fourier = restrict_bivariate_to_circle(phi);
    int degree = 0;
    for (const auto& [key, c] : fourier.terms()) {
        degree = std::max(degree, std::abs(key.first));
    }
    TrigPolynomial out;
    out.cos_coeffs.assign(static_cast<std::size_t>(degree) + 1, 0.0);
    out.sin_coeffs.assign(static_cast<std::size_t>(degree) + 1, 0.0);
    for (int n = 0; n <= degree; ++n) {
        const Complex cp = fourier.coefficient(n);
        const Complex cm = fourier.coefficient(-n);
        Complex a, b;
        if (n == 0) {
            a = cp;
            b = 0.0;
        } else {
            a = cp + cm;
            b = Complex{0.0, 1.0} * (cp - cm);
        }
        if (std::abs(a.imag()) > kRealTol || std::abs(b.imag()) > kRealTol) {
            throw Error(ErrorCode::InvalidArgument, "boundary data is not real on the unit circle");
        }
        out.cos_coeffs[static_cast<std::size_t>(n)] = a.real();
        out.sin_coeffs[static_cast<std::size_t>(n)] = b.real();
    }
    return out;
}

BivariateLaurentExpr boundary_data_from_trig(const TrigPolynomial& phi)
{
    BivariateLaurentExpr out;
    const Complex i{0.0, 1.0};
    for (std::size_t n = 0; n < phi.cos_coeffs.size(); ++n) {
        const int k = static_cast<int>(n);
        if (k == 0) {
            out.add_term(phi.cos_coeffs[0], 0, 0);
            continue;
        }
        out.add_term(0.5 * phi.cos_coeffs[n], k, 0);
        out.add_term(0.5 * phi.cos_coeffs[n], 0, k);
    }
    for (std::size_t n = 1; n < phi.sin_coeffs.size(); ++n) {
        const int k = static_cast<int>(n);
        out.add_term(phi.sin_coeffs[n] / (2.0 * i), k, 0);
        out.add_term(-phi.sin_coeffs[n] / (2.0 * i), 0, k);
    }
    return out;
}

HarmonicPair harmonic_extension(const TrigPolynomial& phi)
{
    // a cos n + b sin n = Re((a - i b) e^{i n theta}) -> u1 gains (a - i b)/2 z^n.
    LogLaurentExpr part;
    for (int n = 0; n <= phi.degree(); ++n) {
        const auto idx = static_cast<std::size_t>(n);
        const double a = idx < phi.cos_coeffs.size() ? phi.cos_coeffs[idx] : 0.0;
        const double b = (n > 0 && idx < phi.sin_coeffs.size()) ? phi.sin_coeffs[idx] : 0.0;
        part.add_term(0.5 * Complex{a, -b}, n, 0);
    }
    return HarmonicPair::symmetric(part);
}

double fourier_dirichlet_solution(const TrigPolynomial& phi, double r, double theta)
{
    double sum = phi.mean();
    double rn = 1.0;
    for (int n = 1; n <= phi.degree(); ++n) {
        rn *= r;
        const auto idx = static_cast<std::size_t>(n);
        const double a = idx < phi.cos_coeffs.size() ? phi.cos_coeffs[idx] : 0.0;
        const double b = idx < phi.sin_coeffs.size() ? phi.sin_coeffs[idx] : 0.0;
        sum += rn * (a * std::cos(n * theta) + b * std::sin(n * theta));
    }
    return sum;
}

double fourier_neumann_oracle(const TrigPolynomial& phi, double r, double theta)
{
    if (std::abs(phi.mean()) > kMeanTol) {
        throw Error(ErrorCode::NonzeroMean, "Neumann data must have zero mean over the circle");
    }
    double sum = 0.0;
    double rn = 1.0;
    for (int n = 1; n <= phi.degree(); ++n) {
        rn *= r;
        const auto idx = static_cast<std::size_t>(n);
        const double a = idx < phi.cos_coeffs.size() ? phi.cos_coeffs[idx] : 0.0;
        const double b = idx < phi.sin_coeffs.size() ? phi.sin_coeffs[idx] : 0.0;
        sum += rn / n * (a * std::cos(n * theta) + b * std::sin(n * theta));
    }
    return sum;
}

} // namespace harmonia
