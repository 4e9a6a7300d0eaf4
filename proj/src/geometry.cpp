#include "harmonia/geometry.hpp"

#include "harmonia/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace harmonia {

namespace {

constexpr double kPoleTol = 1e-14;
constexpr double kSignTol = 1e-8;
constexpr double kRadicandMin = 1e-12;
constexpr double kRadicandMax = 1e12;

class UnitCircleCurve final : public SchwarzCurve {
public:
    Complex value(Complex z) const override
    {
        if (std::abs(z) <= kPoleTol) {
            throw Error(ErrorCode::Pole, "unit-circle Schwarz function has a pole at 0");
        }
        return 1.0 / z;
    }
    Complex inverse_value(Complex zeta) const override { return value(zeta); }
    Complex derivative(Complex z) const override
    {
        if (std::abs(z) <= kPoleTol) {
            throw Error(ErrorCode::Pole, "unit-circle Schwarz function has a pole at 0");
        }
        return -1.0 / (z * z);
    }
    Complex outward_normal(Complex z) const override { return z / std::abs(z); }
    Complex nearest_boundary_point(Complex z) const override
    {
        return std::abs(z) <= kPoleTol ? Complex{1.0, 0.0} : z / std::abs(z);
    }
    std::vector<Complex> sample_curve(int n) const override
    {
        std::vector<Complex> pts;
        for (int j = 0; j < n; ++j) {
            pts.push_back(std::polar(1.0, 2.0 * std::numbers::pi * j / n));
        }
        return pts;
    }
    std::string name() const override { return "unit_circle"; }
};

class CircleCurve final : public SchwarzCurve {
public:
    CircleCurve(Complex center, double radius) : c_(center), r_(radius) {}

    Complex value(Complex z) const override
    {
        const Complex d = z - c_;
        if (std::abs(d) <= kPoleTol * r_) {
            throw Error(ErrorCode::Pole, "circle Schwarz function has a pole at the center");
        }
        return std::conj(c_) + r_ * r_ / d;
    }
    Complex inverse_value(Complex zeta) const override
    {
        const Complex d = zeta - std::conj(c_);
        if (std::abs(d) <= kPoleTol * r_) {
            throw Error(ErrorCode::Pole, "inverse circle Schwarz function has a pole");
        }
        return c_ + r_ * r_ / d;
    }
    Complex derivative(Complex z) const override
    {
        const Complex d = z - c_;
        if (std::abs(d) <= kPoleTol * r_) {
            throw Error(ErrorCode::Pole, "circle Schwarz function has a pole at the center");
        }
        return -r_ * r_ / (d * d);
    }
    Complex outward_normal(Complex z) const override
    {
        const Complex d = z - c_;
        return d / std::abs(d);
    }
    Complex nearest_boundary_point(Complex z) const override
    {
        const Complex d = z - c_;
        if (std::abs(d) <= kPoleTol * r_) {
            return c_ + r_;
        }
        return c_ + r_ * d / std::abs(d);
    }
    std::vector<Complex> sample_curve(int n) const override
    {
        std::vector<Complex> pts;
        for (int j = 0; j < n; ++j) {
            pts.push_back(c_ + std::polar(r_, 2.0 * std::numbers::pi * j / n));
        }
        return pts;
    }
    std::string name() const override { return "circle"; }

private:
    Complex c_;
    double r_;
};

class LineCurve final : public SchwarzCurve {
public:
    LineCurve(Complex point, double angle) : p_(point), dir_(std::polar(1.0, angle)) {}

    // S(z) = conj(p) + e^{-2i alpha} (z - p)
    Complex value(Complex z) const override { return std::conj(p_) + std::conj(dir_ * dir_) * (z - p_); }
    Complex inverse_value(Complex zeta) const override { return p_ + dir_ * dir_ * (zeta - std::conj(p_)); }
    Complex derivative(Complex) const override { return std::conj(dir_ * dir_); }
    Complex outward_normal(Complex) const override { return Complex{0.0, 1.0} * dir_; }
    Complex nearest_boundary_point(Complex z) const override
    {
        return p_ + dir_ * std::real(std::conj(dir_) * (z - p_));
    }
    std::vector<Complex> sample_curve(int n) const override
    {
        std::vector<Complex> pts;
        for (int j = 0; j < n; ++j) {
            const double t = n > 1 ? -2.0 + 4.0 * j / (n - 1) : 0.0;
            pts.push_back(p_ + t * dir_);
        }
        return pts;
    }
    std::string name() const override { return "line"; }

private:
    Complex p_;
    Complex dir_;
};

Complex closest_root(Complex radicand, Complex reference)
{
    const Complex w = std::sqrt(radicand);
    return std::abs(w - reference) <= std::abs(w + reference) ? w : -w;
}

void check_radicand(Complex f, Complex where)
{
    const double m = std::abs(f);
    if (!std::isfinite(m) || m < kRadicandMin || m > kRadicandMax) {
        throw Error(ErrorCode::BranchPoint,
                    "square-root branch point (zero or pole of the derivative) near path point (" +
                        std::to_string(where.real()) + ", " + std::to_string(where.imag()) + ")");
    }
}

} // namespace

// ---------------------------------------------------------------------------
// SchwarzMap

SchwarzMap SchwarzMap::unit_circle()
{
    return SchwarzMap(Kind::UnitCircle, std::make_shared<UnitCircleCurve>());
}

SchwarzMap SchwarzMap::circle(Complex center, double radius)
{
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw Error(ErrorCode::InvalidArgument, "circle radius must be positive");
    }
    SchwarzMap m(Kind::Circle, std::make_shared<CircleCurve>(center, radius));
    m.center_ = center;
    m.radius_ = radius;
    return m;
}

SchwarzMap SchwarzMap::line(Complex point, double angle)
{
    if (!std::isfinite(angle)) {
        throw Error(ErrorCode::InvalidArgument, "line angle must be finite");
    }
    SchwarzMap m(Kind::Line, std::make_shared<LineCurve>(point, angle));
    m.point_ = point;
    m.angle_ = angle;
    return m;
}

SchwarzMap SchwarzMap::custom(std::shared_ptr<const SchwarzCurve> curve)
{
    if (!curve) {
        throw Error(ErrorCode::InvalidArgument, "null Schwarz curve");
    }
    return SchwarzMap(Kind::Custom, std::move(curve));
}

Complex SchwarzMap::value(Complex z) const { return curve_->value(z); }
Complex SchwarzMap::inverse_value(Complex zeta) const { return curve_->inverse_value(zeta); }
Complex SchwarzMap::derivative(Complex z) const { return curve_->derivative(z); }

Complex SchwarzMap::inverse_derivative(Complex zeta) const
{
    const Complex d = curve_->derivative(curve_->inverse_value(zeta));
    if (std::abs(d) < kRadicandMin) {
        throw Error(ErrorCode::Pole, "inverse Schwarz derivative is singular");
    }
    return 1.0 / d;
}

Complex SchwarzMap::outward_normal(Complex z) const { return curve_->outward_normal(z); }
Complex SchwarzMap::nearest_boundary_point(Complex z) const { return curve_->nearest_boundary_point(z); }
std::vector<Complex> SchwarzMap::sample_curve(int n) const { return curve_->sample_curve(n); }

double SchwarzMap::curve_residual(Complex z) const { return std::abs(curve_->value(z) - std::conj(z)); }

bool SchwarzMap::on_curve(Complex z, double tol) const
{
    return curve_residual(z) <= tol * std::max(1.0, std::abs(z));
}

// ---------------------------------------------------------------------------
// PathSpec

PathSpec PathSpec::segment(Complex start, Complex end, int subdivision)
{
    PathSpec p;
    p.kind = Kind::Segment;
    p.start = start;
    p.end = end;
    p.subdivision = subdivision;
    p.validate();
    return p;
}

PathSpec PathSpec::radial_ray(double theta, double r_from, double r_to, int subdivision)
{
    PathSpec p;
    p.kind = Kind::RadialRay;
    p.theta = theta;
    p.r_from = r_from;
    p.r_to = r_to;
    p.subdivision = subdivision;
    p.validate();
    return p;
}

Complex PathSpec::from() const { return kind == Kind::Segment ? start : std::polar(r_from, theta); }
Complex PathSpec::to() const { return kind == Kind::Segment ? end : std::polar(r_to, theta); }

double PathSpec::parameter_of(Complex p) const
{
    const Complex v = velocity();
    const double len2 = std::norm(v);
    if (len2 == 0.0) {
        return 0.0;
    }
    return std::clamp(std::real(std::conj(v) * (p - from())) / len2, 0.0, 1.0);
}

void PathSpec::validate() const
{
    if (subdivision < 1) {
        throw Error(ErrorCode::InvalidArgument, "path subdivision must be positive");
    }
    if (kind == Kind::RadialRay && (!(r_from > 0.0) || !(r_to > 0.0))) {
        throw Error(ErrorCode::InvalidArgument, "radial ray radii must be positive");
    }
    if (from() == to()) {
        throw Error(ErrorCode::InvalidArgument, "path endpoints coincide");
    }
}

// ---------------------------------------------------------------------------
// Point maps

Complex schwarz_value(const SchwarzMap& map, Complex z) { return map.value(z); }

Complex inverse_schwarz_value(const SchwarzMap& map, Complex zeta) { return map.inverse_value(zeta); }

BiPoint reflect_bipoint(const SchwarzMap& map, const BiPoint& p)
{
    return {map.inverse_value(p.zeta), map.value(p.z)};
}

std::pair<double, double> anti_conformal_reflect(const SchwarzMap& map, double x, double y)
{
    const Complex r = std::conj(map.value({x, y}));
    return {r.real(), r.imag()};
}

// ---------------------------------------------------------------------------
// Square-root branches

ContinuedSqrt::ContinuedSqrt(Radicand radicand, Complex anchor, Complex anchor_value,
                             const PathSpec& path, int samples_per_panel)
    : radicand_(std::move(radicand)), anchor_value_(anchor_value), path_(path)
{
    Complex current = anchor_value;
    auto step_to = [&](Complex tau) {
        const Complex f = radicand_(tau);
        check_radicand(f, tau);
        const Complex next = closest_root(f, current);
        if (std::abs(next - current) > 0.5 * std::max(std::abs(next), std::abs(current))) {
            throw Error(ErrorCode::BranchPoint, "square-root branch jumps between samples");
        }
        current = next;
    };

    const Complex start = path_.from();
    if (std::abs(start - anchor) > 0.0) {
        for (int j = 1; j <= samples_per_panel; ++j) {
            step_to(anchor + (start - anchor) * (static_cast<double>(j) / samples_per_panel));
        }
    }

    const int n = samples_per_panel * path_.subdivision;
    samples_.reserve(static_cast<std::size_t>(n) + 1);
    samples_.push_back(current);
    for (int j = 1; j <= n; ++j) {
        step_to(path_.at(static_cast<double>(j) / n));
        samples_.push_back(current);
    }
}

Complex ContinuedSqrt::at(Complex tau) const
{
    const double t = path_.parameter_of(tau);
    const auto n = samples_.size() - 1;
    const auto j = static_cast<std::size_t>(std::lround(t * static_cast<double>(n)));
    const Complex f = radicand_(tau);
    check_radicand(f, tau);
    return closest_root(f, samples_[j]);
}

Complex validated_sqrt_derivative(const SchwarzMap& map, Complex b)
{
    if (!map.on_curve(b, 1e-8)) {
        throw Error(ErrorCode::InvalidArgument, "branch anchor does not lie on the curve");
    }
    const Complex sp = map.derivative(b);
    check_radicand(sp, b);
    const Complex s = std::sqrt(sp);
    const Complex n = map.outward_normal(b);
    // v = Re(conj(n) z) has unit outward normal derivative; in pair form
    // v1' = conj(n)/2 and v2' = n/2.
    const Complex i{0.0, 1.0};
    const Complex dvdn = (i / s) * (0.5 * std::conj(n) - 0.5 * n * sp);
    if (std::abs(dvdn - 1.0) < kSignTol) {
        return s;
    }
    if (std::abs(dvdn + 1.0) < kSignTol) {
        return -s;
    }
    throw Error(ErrorCode::SignValidation,
                "normal-derivative check of sqrt(S') returned neither +1 nor -1");
}

ContinuedSqrt sqrt_schwarz_derivative(const SchwarzMap& map, const PathSpec& path,
                                      std::optional<Complex> anchor)
{
    path.validate();
    Complex b;
    if (anchor) {
        b = *anchor;
    } else if (map.on_curve(path.to())) {
        b = path.to();
    } else if (map.on_curve(path.from())) {
        b = path.from();
    } else {
        b = map.nearest_boundary_point(path.from());
    }
    const Complex value = validated_sqrt_derivative(map, b);
    return ContinuedSqrt([map](Complex tau) { return map.derivative(tau); }, b, value, path);
}

ContinuedSqrt sqrt_inverse_schwarz_derivative(const SchwarzMap& map, const PathSpec& zeta_path,
                                              Complex boundary_anchor)
{
    zeta_path.validate();
    const Complex value = 1.0 / validated_sqrt_derivative(map, boundary_anchor);
    return ContinuedSqrt([map](Complex xi) { return map.inverse_derivative(xi); },
                         map.value(boundary_anchor), value, zeta_path);
}

} // namespace harmonia
