#pragma once

// Points of C^2, Schwarz functions of lines and circles, and the reflections
// they induce.
//
// A curve Gamma is described by its Schwarz function S (analytic near Gamma,
// S(z) = conj(z) on Gamma) and the inverse S~. The anti-conformal reflection
// across Gamma is R(z) = conj(S(z)); on C^2 it becomes (z, zeta) -> (S~(zeta), S(z)).

#include "harmonia/algebra.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace harmonia {

struct BiPoint {
    Complex z;
    Complex zeta;

    /// (x + iy, x - iy)
    static BiPoint real_slice(Complex z) { return {z, std::conj(z)}; }
    /// (r e^{i theta}, r e^{-i theta})
    static BiPoint polar(double r, double theta)
    {
        return {std::polar(r, theta), std::polar(r, -theta)};
    }

    bool is_real_slice(double tol = 1e-12) const
    {
        return std::abs(zeta - std::conj(z)) <= tol * std::max(1.0, std::abs(z));
    }
};

/// Contract for a curve usable by the reflection machinery. Implementations
/// must be immutable. Only lines and circles ship with the library; any other
/// algebraic curve with a single-valued S, S~ near the working region can be
/// plugged in by implementing this interface.
class SchwarzCurve {
public:
    virtual ~SchwarzCurve() = default;

    virtual Complex value(Complex z) const = 0;           // S
    virtual Complex inverse_value(Complex zeta) const = 0; // S~
    virtual Complex derivative(Complex z) const = 0;       // S'
    /// Unit normal at a point of Gamma, pointing to the side called "outward".
    virtual Complex outward_normal(Complex z_on_curve) const = 0;
    /// A point of Gamma close to z (used to anchor square-root branches).
    virtual Complex nearest_boundary_point(Complex z) const = 0;
    /// Points spread along (an arc of) Gamma.
    virtual std::vector<Complex> sample_curve(int n) const = 0;
    virtual std::string name() const = 0;
};

/// Value handle over an immutable SchwarzCurve.
class SchwarzMap {
public:
    enum class Kind { UnitCircle, Circle, Line, Custom };

    static SchwarzMap unit_circle();
    static SchwarzMap circle(Complex center, double radius);
    /// Line through `point` with direction e^{i angle}; the outward normal is
    /// i * e^{i angle} (the left side of the direction).
    static SchwarzMap line(Complex point, double angle);
    static SchwarzMap custom(std::shared_ptr<const SchwarzCurve> curve);

    Kind kind() const noexcept { return kind_; }
    Complex center() const noexcept { return center_; }
    double radius() const noexcept { return radius_; }
    Complex point() const noexcept { return point_; }
    double angle() const noexcept { return angle_; }

    Complex value(Complex z) const;
    Complex inverse_value(Complex zeta) const;
    Complex derivative(Complex z) const;
    /// S~'(zeta) = 1 / S'(S~(zeta)).
    Complex inverse_derivative(Complex zeta) const;
    Complex outward_normal(Complex z_on_curve) const;
    Complex nearest_boundary_point(Complex z) const;
    std::vector<Complex> sample_curve(int n) const;

    /// |S(z) - conj(z)|, zero exactly on Gamma.
    double curve_residual(Complex z) const;
    bool on_curve(Complex z, double tol = 1e-10) const;

    const SchwarzCurve& curve() const noexcept { return *curve_; }

private:
    SchwarzMap(Kind kind, std::shared_ptr<const SchwarzCurve> curve) : kind_(kind), curve_(std::move(curve)) {}

    Kind kind_ = Kind::UnitCircle;
    Complex center_{};
    double radius_ = 1.0;
    Complex point_{};
    double angle_ = 0.0;
    std::shared_ptr<const SchwarzCurve> curve_;
};

/// Straight integration contour. A radial ray is a segment on a ray from 0.
struct PathSpec {
    enum class Kind { Segment, RadialRay };

    Kind kind = Kind::Segment;
    Complex start{};
    Complex end{};
    double theta = 0.0;
    double r_from = 0.0;
    double r_to = 0.0;
    int subdivision = 1;

    static PathSpec segment(Complex start, Complex end, int subdivision = 1);
    static PathSpec radial_ray(double theta, double r_from, double r_to, int subdivision = 1);

    Complex from() const;
    Complex to() const;
    Complex at(double t) const { return from() + t * (to() - from()); }
    Complex velocity() const { return to() - from(); }
    /// Parameter of the orthogonal projection of `p` onto the path, clamped to [0, 1].
    double parameter_of(Complex p) const;
    void validate() const;
};

Complex schwarz_value(const SchwarzMap& map, Complex z);
Complex inverse_schwarz_value(const SchwarzMap& map, Complex zeta);

/// (z, zeta) -> (S~(zeta), S(z)). An involution; fixes exactly the points of
/// the complexified curve.
BiPoint reflect_bipoint(const SchwarzMap& map, const BiPoint& p);

/// R(x, y) = conj(S(x + iy)).
std::pair<double, double> anti_conformal_reflect(const SchwarzMap& map, double x, double y);

/// A branch of sqrt(f) continued along a segment from a point where its value
/// is known. Queries return the root closest to the continued sample at the
/// nearest path parameter.
class ContinuedSqrt {
public:
    using Radicand = std::function<Complex(Complex)>;

    /// `anchor` need not lie on `path`; the branch is continued along the
    /// straight connector anchor -> path.from() first.
    ContinuedSqrt(Radicand radicand, Complex anchor, Complex anchor_value, const PathSpec& path,
                  int samples_per_panel = 256);

    Complex at(Complex tau) const;
    const PathSpec& path() const noexcept { return path_; }
    Complex anchor_value() const noexcept { return anchor_value_; }

private:
    Radicand radicand_;
    Complex anchor_value_;
    PathSpec path_;
    std::vector<Complex> samples_;
};

/// sqrt(S') along `path`, the sign chosen so that the normal-derivative formula
///     dv/dn = (i / sqrt(S'(z))) (v1'(z) - v2'(zeta) S'(z))
/// gives the outward derivative at the anchor. The anchor is the endpoint of
/// `path` lying on Gamma, or `anchor` if supplied, or the boundary point
/// nearest to the path start.
ContinuedSqrt sqrt_schwarz_derivative(const SchwarzMap& map, const PathSpec& path,
                                      std::optional<Complex> anchor = std::nullopt);

/// sqrt(S~') along a path in the zeta plane, consistent with the z-side branch:
/// sqrt(S~'(S(b))) = 1 / sqrt(S'(b)) at the boundary anchor b.
ContinuedSqrt sqrt_inverse_schwarz_derivative(const SchwarzMap& map, const PathSpec& zeta_path,
                                              Complex boundary_anchor);

/// Validated sqrt(S') at a single point of Gamma.
Complex validated_sqrt_derivative(const SchwarzMap& map, Complex z_on_curve);

} // namespace harmonia
