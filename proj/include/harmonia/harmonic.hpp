#pragma once

// Complexified harmonic functions u(z, zeta) = u1(z) + u2(zeta). Every such
// function satisfies d^2 u / dz dzeta = 0; the real plane is the slice
// zeta = conj(z).

#include "harmonia/algebra.hpp"
#include "harmonia/geometry.hpp"

#include <functional>

namespace harmonia {

class HarmonicPair {
public:
    HarmonicPair() : part_zeta_(2.0 * std::numbers::pi - kDefaultCutAngle) {}
    HarmonicPair(LogLaurentExpr part_z, LogLaurentExpr part_zeta)
        : part_z_(std::move(part_z)), part_zeta_(std::move(part_zeta))
    {
    }

    /// u = u1(z) + conj-reflected u1, i.e. u = 2 Re u1 on the real slice.
    static HarmonicPair symmetric(const LogLaurentExpr& part_z);

    /// Constant c split evenly between the two parts.
    static HarmonicPair constant(Complex c, double cut_angle = kDefaultCutAngle);

    const LogLaurentExpr& part_z() const noexcept { return part_z_; }
    const LogLaurentExpr& part_zeta() const noexcept { return part_zeta_; }

    /// Sets the z-part window to `cut_angle` and the zeta-part window to its mirror.
    HarmonicPair with_cut(double cut_angle) const;

    HarmonicPair& operator+=(const HarmonicPair& rhs);
    HarmonicPair& operator-=(const HarmonicPair& rhs);
    HarmonicPair& operator*=(Complex s);
    friend HarmonicPair operator+(HarmonicPair lhs, const HarmonicPair& rhs) { return lhs += rhs; }
    friend HarmonicPair operator-(HarmonicPair lhs, const HarmonicPair& rhs) { return lhs -= rhs; }
    friend HarmonicPair operator*(HarmonicPair h, Complex s) { return h *= s; }
    friend HarmonicPair operator*(Complex s, HarmonicPair h) { return h *= s; }

    /// Adds a constant, split evenly between the parts.
    HarmonicPair plus_constant(Complex c) const;

private:
    LogLaurentExpr part_z_;
    LogLaurentExpr part_zeta_;
};

struct RobinParams {
    double a = 0.0;
    double b = 1.0;

    /// Throws InvalidArgument unless b != 0 and both are finite.
    static RobinParams make(double a, double b);
    void validate() const;
};

Complex eval_pair(const HarmonicPair& h, const BiPoint& p, double cut_margin = kDefaultCutMargin);

/// Real-slice value at (x, y). Throws NonSymmetric when the imaginary residue
/// exceeds 1e-11 (relative to max(1, |value|)).
double eval_real(const HarmonicPair& h, double x, double y, double cut_margin = kDefaultCutMargin);

/// d/dr of u along the ray through p: u1'(z) e^{i theta} + u2'(zeta) e^{-i theta}.
Complex radial_derivative(const HarmonicPair& h, const BiPoint& p, double theta,
                          double cut_margin = kDefaultCutMargin);

/// Outward normal derivative at z on Gamma through the Schwarz function:
///     (i / sqrt(S'(z))) (u1'(z) - u2'(S(z)) S'(z)).
Complex normal_derivative_schwarz(const HarmonicPair& h, const SchwarzMap& map, Complex z);

/// a u + b du/dr at (e^{i theta}, e^{-i theta}).
Complex robin_trace_circle(const HarmonicPair& h, const RobinParams& params, double theta);

/// Samples the real slice and reports whether |Im u| stays below `tol`.
bool is_conjugate_symmetric(const HarmonicPair& h, double tol = 1e-11);

/// Real-slice evaluator as a plain function of (x, y).
std::function<double(double, double)> real_field(const HarmonicPair& h);

} // namespace harmonia
