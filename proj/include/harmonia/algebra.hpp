#pragma once

// Exact calculus over log-Laurent expressions
//
//     e(z) = sum_j c_j * z^{k_j} * (log z)^{m_j},   k_j in Z, m_j >= 0,
//
// and over bivariate Laurent expressions sum c * z^k * zeta^m. The one-variable
// class is closed under d/dz and under the primitive of e(z)/z, which is every
// integral the boundary operators and reflection formulas need.

#include <complex>
#include <initializer_list>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

namespace harmonia {

using Complex = std::complex<double>;

inline constexpr double kDefaultCutAngle = std::numbers::pi;
inline constexpr double kDefaultCutMargin = 1e-6;
// Coefficients with |c| below this are dropped during normalization.
inline constexpr double kDropThreshold = 1e-15;

struct LogLaurentTerm {
    Complex coeff;
    int power = 0;
    int logpow = 0;
};

/// Finite sum of c * z^k * (log z)^m.
///
/// The logarithm is the branch with arg z in (cut_angle - 2*pi, cut_angle].
/// With the default cut_angle = pi this is the principal branch. The cut angle
/// selects a window, not just a direction: pi and -pi give different branches.
class LogLaurentExpr {
public:
    using Key = std::pair<int, int>; // (power, logpow)

    LogLaurentExpr() = default;
    explicit LogLaurentExpr(double cut_angle) : cut_angle_(cut_angle) {}
    LogLaurentExpr(std::initializer_list<LogLaurentTerm> terms, double cut_angle = kDefaultCutAngle);
    LogLaurentExpr(const std::vector<LogLaurentTerm>& terms, double cut_angle = kDefaultCutAngle);

    static LogLaurentExpr constant(Complex c, double cut_angle = kDefaultCutAngle);
    static LogLaurentExpr monomial(Complex c, int power, int logpow = 0,
                                   double cut_angle = kDefaultCutAngle);

    const std::map<Key, Complex>& terms() const noexcept { return terms_; }
    std::vector<LogLaurentTerm> term_list() const;
    double cut_angle() const noexcept { return cut_angle_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool has_log() const noexcept;
    Complex coefficient(int power, int logpow = 0) const;
    int max_logpow() const noexcept;

    LogLaurentExpr with_cut(double cut_angle) const;

    /// Multiplies by z^shift.
    LogLaurentExpr shifted(int shift) const;

    /// Substitutes z -> 1/z on the positive real axis, where log(1/z) = -log z.
    /// Only meaningful for expressions in a positive real variable.
    LogLaurentExpr reciprocal_argument() const;

    /// Termwise complex conjugate of the coefficients with the branch window
    /// mirrored (cut -> 2*pi - cut), so that conjugate_reflect(e)(conj z) = conj(e(z)).
    LogLaurentExpr conjugate_reflect() const;

    LogLaurentExpr& add_term(Complex c, int power, int logpow = 0);

    LogLaurentExpr& operator+=(const LogLaurentExpr& rhs);
    LogLaurentExpr& operator-=(const LogLaurentExpr& rhs);
    LogLaurentExpr& operator*=(Complex s);

    friend LogLaurentExpr operator+(LogLaurentExpr lhs, const LogLaurentExpr& rhs) { return lhs += rhs; }
    friend LogLaurentExpr operator-(LogLaurentExpr lhs, const LogLaurentExpr& rhs) { return lhs -= rhs; }
    friend LogLaurentExpr operator*(LogLaurentExpr e, Complex s) { return e *= s; }
    friend LogLaurentExpr operator*(Complex s, LogLaurentExpr e) { return e *= s; }
    friend LogLaurentExpr operator-(LogLaurentExpr e) { return e *= Complex(-1.0); }

    /// Product of two expressions (same branch window).
    friend LogLaurentExpr operator*(const LogLaurentExpr& lhs, const LogLaurentExpr& rhs);

private:
    void normalize();

    std::map<Key, Complex> terms_;
    double cut_angle_ = kDefaultCutAngle;
};

/// Finite sum of c * z^kz * zeta^kzeta.
class BivariateLaurentExpr {
public:
    using Key = std::pair<int, int>; // (zpow, zetapow)

    struct Term {
        Complex coeff;
        int zpow = 0;
        int zetapow = 0;
    };

    BivariateLaurentExpr() = default;
    BivariateLaurentExpr(std::initializer_list<Term> terms);
    explicit BivariateLaurentExpr(const std::vector<Term>& terms);

    static BivariateLaurentExpr constant(Complex c);

    const std::map<Key, Complex>& terms() const noexcept { return terms_; }
    std::vector<Term> term_list() const;
    bool empty() const noexcept { return terms_.empty(); }

    BivariateLaurentExpr& add_term(Complex c, int zpow, int zetapow);

    Complex eval(Complex z, Complex zeta) const;

    BivariateLaurentExpr& operator+=(const BivariateLaurentExpr& rhs);
    BivariateLaurentExpr& operator*=(Complex s);
    friend BivariateLaurentExpr operator+(BivariateLaurentExpr lhs, const BivariateLaurentExpr& rhs) { return lhs += rhs; }
    friend BivariateLaurentExpr operator*(BivariateLaurentExpr e, Complex s) { return e *= s; }
    friend BivariateLaurentExpr operator*(const BivariateLaurentExpr& lhs, const BivariateLaurentExpr& rhs);

private:
    void normalize();

    std::map<Key, Complex> terms_;
};

/// Integer power of a nonzero complex number, computed in polar form.
Complex ipow(Complex z, int k);

/// Representative of `theta` in the branch window (cut - 2*pi, cut].
double branch_argument(double theta, double cut_angle) noexcept;

/// Angular distance between `theta` and the cut ray, in [0, pi].
double distance_to_cut(double theta, double cut_angle) noexcept;

/// log z on the branch with arg in (cut - 2*pi, cut].
Complex branch_log(Complex z, double cut_angle);

/// Evaluates e at z. Throws Domain at z = 0 and CutProximity when e carries
/// logarithms and z lies within `cut_margin` radians of the cut ray.
Complex eval(const LogLaurentExpr& e, Complex z, double cut_margin = kDefaultCutMargin);

LogLaurentExpr differentiate(const LogLaurentExpr& e);

/// Exact primitive A of e(z)/z with zero integration constant:
/// differentiate(A) == e(z)/z.
LogLaurentExpr antiderivative_over_arg(const LogLaurentExpr& e);

/// Substitutes zeta = 1/z (the Schwarz function of the unit circle):
/// c z^k zeta^m -> c z^(k-m).
LogLaurentExpr restrict_bivariate_to_circle(const BivariateLaurentExpr& phi,
                                            double cut_angle = kDefaultCutAngle);

/// Substitutes z = rho * e^{i theta}; the result is an expression in rho > 0
/// with log z = log rho + i theta' expanded binomially, theta' being the
/// representative of theta in the expression's branch window.
LogLaurentExpr restrict_to_ray(const LogLaurentExpr& e, double theta,
                               double cut_margin = kDefaultCutMargin);

/// Integral of e(rho)/rho over [from, to] on the positive real axis, exact.
Complex integrate_over_arg(const LogLaurentExpr& e, double from, double to);

/// Coefficientwise comparison after normalization. Terms present in only one
/// side must be below `abs_tol`; shared terms must agree to `rel_tol`.
bool equivalent(const LogLaurentExpr& lhs, const LogLaurentExpr& rhs,
                double rel_tol = 64 * 2.220446049250313e-16, double abs_tol = 1e-14);

} // namespace harmonia
