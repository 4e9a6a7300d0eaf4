#include "harmonia/harmonic.hpp"

#include "harmonia/error.hpp"

#include <algorithm>
#include <cmath>

namespace harmonia {

HarmonicPair HarmonicPair::symmetric(const LogLaurentExpr& part_z)
{
    return {part_z, part_z.conjugate_reflect()};
}

HarmonicPair HarmonicPair::constant(Complex c, double cut_angle)
{
    return HarmonicPair(LogLaurentExpr(cut_angle), LogLaurentExpr(2.0 * std::numbers::pi - cut_angle))
        .plus_constant(c);
}

HarmonicPair HarmonicPair::with_cut(double cut_angle) const
{
    return {part_z_.with_cut(cut_angle), part_zeta_.with_cut(2.0 * std::numbers::pi - cut_angle)};
}

HarmonicPair& HarmonicPair::operator+=(const HarmonicPair& rhs)
{
    part_z_ += rhs.part_z_;
    part_zeta_ += rhs.part_zeta_;
    return *this;
}

HarmonicPair& HarmonicPair::operator-=(const HarmonicPair& rhs)
{
    part_z_ -= rhs.part_z_;
    part_zeta_ -= rhs.part_zeta_;
    return *this;
}

HarmonicPair& HarmonicPair::operator*=(Complex s)
{
    part_z_ *= s;
    part_zeta_ *= s;
    return *this;
}

HarmonicPair HarmonicPair::plus_constant(Complex c) const
{
    HarmonicPair h = *this;
    h.part_z_.add_term(0.5 * c, 0, 0);
    h.part_zeta_.add_term(0.5 * c, 0, 0);
    return h;
}

RobinParams RobinParams::make(double a, double b)
{
    RobinParams p{a, b};
    p.validate();
    return p;
}

void RobinParams::validate() const
{
    if (!std::isfinite(a) || !std::isfinite(b) || b == 0.0) {
        throw Error(ErrorCode::InvalidArgument, "Robin parameters need finite a and b != 0");
    }
}

Complex eval_pair(const HarmonicPair& h, const BiPoint& p, double cut_margin)
{
    return eval(h.part_z(), p.z, cut_margin) + eval(h.part_zeta(), p.zeta, cut_margin);
}

double eval_real(const HarmonicPair& h, double x, double y, double cut_margin)
{
    const Complex value = eval_pair(h, BiPoint::real_slice({x, y}), cut_margin);
    if (std::abs(value.imag()) > 1e-11 * std::max(1.0, std::abs(value))) {
        throw Error(ErrorCode::NonSymmetric, "pair is not real on the real slice");
    }
    return value.real();
}

Complex radial_derivative(const HarmonicPair& h, const BiPoint& p, double theta, double cut_margin)
{
    return eval(differentiate(h.part_z()), p.z, cut_margin) * std::polar(1.0, theta) +
           eval(differentiate(h.part_zeta()), p.zeta, cut_margin) * std::polar(1.0, -theta);
}

Complex normal_derivative_schwarz(const HarmonicPair& h, const SchwarzMap& map, Complex z)
{
    const Complex root = validated_sqrt_derivative(map, z);
    const Complex zeta = map.value(z);
    const Complex i{0.0, 1.0};
    return (i / root) * (eval(differentiate(h.part_z()), z) -
                         eval(differentiate(h.part_zeta()), zeta) * map.derivative(z));
}

Complex robin_trace_circle(const HarmonicPair& h, const RobinParams& params, double theta)
{
    const BiPoint p = BiPoint::polar(1.0, theta);
    return params.a * eval_pair(h, p) + params.b * radial_derivative(h, p, theta);
}

bool is_conjugate_symmetric(const HarmonicPair& h, double tol)
{
    for (double r : {0.7, 1.0, 1.3}) {
        for (int j = 0; j < 12; ++j) {
            const double theta = -2.5 + 5.0 * j / 11.0;
            const Complex v = eval_pair(h, BiPoint::polar(r, theta));
            if (std::abs(v.imag()) > tol * std::max(1.0, std::abs(v))) {
                return false;
            }
        }
    }
    return true;
}

std::function<double(double, double)> real_field(const HarmonicPair& h)
{
    return [h](double x, double y) { return eval_real(h, x, y); };
}

} // namespace harmonia
