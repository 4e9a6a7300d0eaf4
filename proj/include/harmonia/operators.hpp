#pragma once

// Boundary-condition conversion operators on the unit circle and across a
// general Schwarz arc.
//
// With u = u1(z) + u2(zeta) solving a Dirichlet problem with data phi, the
// Neumann solution with the same data is
//
//     v(z, zeta) = v(z0, zeta0) - int_z^z0 u1(t)/t dt - int_zeta^zeta0 u2(s)/s ds,
//
// which the algebra module evaluates exactly. The Robin variants follow from
// the same primitive applied to a w + b z w'.

#include "harmonia/algebra.hpp"
#include "harmonia/geometry.hpp"
#include "harmonia/harmonic.hpp"
#include "harmonia/numerics.hpp"

#include <optional>

namespace harmonia {

/// Pins the free additive constant: v(z0, S(z0)) = value_at_base.
struct BasePointNormalization {
    Complex z0{1.0, 0.0};
    double value_at_base = 0.0;
};

/// Disk Neumann solution V(z) = int_0^1 U(rho z)/rho d rho, with U the
/// Dirichlet solution for phi built from its Fourier series. V(0) = 0.
/// Throws NonzeroMean when the mean of phi exceeds 1e-10.
double neumann_from_dirichlet_disk(const BivariateLaurentExpr& phi, Complex z,
                                   const QuadratureConfig& quad = {});

/// Exact Dirichlet-to-Neumann map on the unit circle.
HarmonicPair neumann_from_dirichlet_pair(const HarmonicPair& u, const BasePointNormalization& norm = {});

/// Robin-to-Neumann map: the result has dv/dn = (a w + b dw/dn)/2 on the circle.
HarmonicPair neumann_from_robin_pair(const HarmonicPair& w, const RobinParams& params,
                                     const BasePointNormalization& norm = {});

/// u1 = (a/2) w1 + (b/2) z w1', u2 = (a/2) w2 + (b/2) zeta w2'. The Dirichlet
/// trace of u is half the Robin trace of w.
HarmonicPair dirichlet_from_robin_pair(const HarmonicPair& w, const RobinParams& params);

/// Particular solution h of a h + b z h' = z f' + g, without homogeneous part.
/// For a right-hand side term c z^k (log z)^m:
///   a + b k != 0: solved by descending recursion in the log power;
///   a + b k == 0: h gains c / (b (m+1)) z^k (log z)^{m+1}.
/// Throws UnsupportedResonance when a + b k is nonzero but too close to zero
/// for a well-conditioned division.
LogLaurentExpr solve_robin_analytic(const LogLaurentExpr& f, const LogLaurentExpr& g,
                                    const RobinParams& params);

/// Neumann field across an arc of a curve with Schwarz function S:
///     v = v0 + i int_z^z0 u1(t) sqrt(S'(t)) dt - i int_zeta^zeta0 u2(s) sqrt(S~'(s)) ds,
/// evaluated by adaptive path quadrature. Stores only immutable data.
class SchwarzNeumannField {
public:
    SchwarzNeumannField(HarmonicPair u, SchwarzMap map, BasePointNormalization norm,
                        QuadratureConfig quad = {}, int subdivision = 4);

    /// v at p, integrating along straight segments p.z -> z0 and p.zeta -> S(z0).
    Complex operator()(const BiPoint& p) const;

    /// v at (path_z.from(), path_zeta.from()); the paths must end at z0 and S(z0).
    Complex value_along(const PathSpec& path_z, const PathSpec& path_zeta) const;

    const BasePointNormalization& base() const noexcept { return norm_; }
    const SchwarzMap& map() const noexcept { return map_; }

private:
    HarmonicPair u_;
    SchwarzMap map_;
    BasePointNormalization norm_;
    Complex zeta0_;
    QuadratureConfig quad_;
    int subdivision_;
};

/// Default base point on Gamma: the boundary point nearest to 1.
BasePointNormalization default_base_point(const SchwarzMap& map);

SchwarzNeumannField neumann_from_dirichlet_schwarz(const HarmonicPair& u, const SchwarzMap& map,
                                                   std::optional<BasePointNormalization> norm = std::nullopt,
                                                   const QuadratureConfig& quad = {});

} // namespace harmonia
