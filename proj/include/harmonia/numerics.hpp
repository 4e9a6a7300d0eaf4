#pragma once

// Independent numerical oracles: adaptive Simpson quadrature along straight
// complex paths, the 5-point Laplacian, and the Fourier-series solutions of
// the Dirichlet and Neumann problems in the unit disk.

#include "harmonia/algebra.hpp"
#include "harmonia/geometry.hpp"
#include "harmonia/harmonic.hpp"

#include <functional>
#include <vector>

namespace harmonia {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    int max_depth = 30;

    void validate() const;
};

using ComplexFn = std::function<Complex(Complex)>;
using RealFn = std::function<double(double)>;
using RealField = std::function<double(double, double)>;

/// Integral of f(tau) dtau along `path`. Each of the path's `subdivision`
/// panels is refined adaptively with its share of the tolerance. Throws
/// Nonconvergence when a panel reaches max_depth without meeting it.
Complex integrate_path(const ComplexFn& f, const PathSpec& path, const QuadratureConfig& cfg = {});

/// Integral of a real function over [a, b] by the same adaptive Simpson rule.
double integrate_real(const RealFn& f, double a, double b, const QuadratureConfig& cfg = {});

/// (f(x+h,y) + f(x-h,y) + f(x,y+h) + f(x,y-h) - 4 f(x,y)) / h^2
double fd_laplacian(const RealField& field, double x, double y, double h);

/// phi(theta) = sum_{n=0}^{N} a_n cos(n theta) + b_n sin(n theta). b_0 is unused.
struct TrigPolynomial {
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;

    int degree() const;
    double eval(double theta) const;
    double mean() const { return cos_coeffs.empty() ? 0.0 : cos_coeffs[0]; }
};

/// Fourier coefficients of phi restricted to the unit circle (zeta = 1/z).
/// Throws InvalidArgument when phi is not real-valued there.
TrigPolynomial trig_from_boundary_data(const BivariateLaurentExpr& phi);

/// Boundary data as a bivariate expression: cos(n theta) -> (z^n + zeta^n)/2,
/// sin(n theta) -> (z^n - zeta^n)/(2i).
BivariateLaurentExpr boundary_data_from_trig(const TrigPolynomial& phi);

/// Harmonic pair whose trace on the unit circle is phi (no log terms).
HarmonicPair harmonic_extension(const TrigPolynomial& phi);

/// Dirichlet solution in the disk: a_0 + sum r^n (a_n cos n theta + b_n sin n theta).
double fourier_dirichlet_solution(const TrigPolynomial& phi, double r, double theta);

/// Neumann solution in the disk with v(0) = 0:
///     sum_{n>=1} (r^n / n)(a_n cos n theta + b_n sin n theta).
/// Throws NonzeroMean unless |a_0| <= 1e-10.
double fourier_neumann_oracle(const TrigPolynomial& phi, double r, double theta);

} // namespace harmonia
