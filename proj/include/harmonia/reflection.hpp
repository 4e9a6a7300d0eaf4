#pragma once

// Reflection formulas: the value of a harmonic function at the Schwarz-mirror
// of a point, from its value at the point plus a correction that depends only
// on the boundary data.
//
//   Dirichlet:  u(S~(zeta), S(z)) = phi(S~(zeta), zeta) + phi(z, S(z)) - u(z, zeta)
//   Neumann, unit circle, p = (r e^{it}, r e^{-it}):
//       v(reflected) = v(p) - int_{1/r}^{r} phi(rho e^{it}, 1/(rho e^{it})) / rho d rho
//   Robin, unit circle:
//       w(reflected) = w(p) - (a/b) int_r^1 [w(rho e^{it}) + w(e^{it}/rho)] / rho d rho
//                           - (1/b) int_{1/r}^{r} phi_w(rho e^{it}, 1/(rho e^{it})) / rho d rho
//   Neumann, general arc:
//       v(reflected) = v(p) + i int_{S~(zeta)}^{z} phi(t, S(t)) sqrt(S'(t)) dt
//
// The circle integrals are computed exactly by the algebra module.

#include "harmonia/algebra.hpp"
#include "harmonia/geometry.hpp"
#include "harmonia/harmonic.hpp"
#include "harmonia/numerics.hpp"

#include <functional>
#include <string_view>

namespace harmonia {

enum class ReflectionFormula { DirichletStudy, NeumannCircle, RobinCircle, NeumannSchwarz };

std::string_view formula_name(ReflectionFormula f) noexcept;

struct ReflectionResult {
    ReflectionFormula formula = ReflectionFormula::DirichletStudy;
    BiPoint point;
    BiPoint reflected_point;
    Complex value;
    /// Dirichlet: phi(S~(zeta), zeta) + phi(z, S(z)), and value = correction - u(p).
    /// Otherwise the additive term, value = (field at p) + correction.
    Complex correction;
    /// Robin only: the boundary-data integral and the self-referential integral.
    Complex data_correction;
    Complex self_correction;
};

using FieldFn = std::function<Complex(const BiPoint&)>;

ReflectionResult reflect_dirichlet_study(const HarmonicPair& u, const BivariateLaurentExpr& phi,
                                         const SchwarzMap& map, const BiPoint& p);
ReflectionResult reflect_dirichlet_study(const FieldFn& u, const BivariateLaurentExpr& phi,
                                         const SchwarzMap& map, const BiPoint& p);

/// Neumann reflection across the unit circle at (r e^{i theta}, r e^{-i theta}).
ReflectionResult reflect_neumann_circle(const HarmonicPair& v, const BivariateLaurentExpr& phi,
                                        double r, double theta, double cut_margin = kDefaultCutMargin);
/// Same, for a real-slice BiPoint (InvalidArgument otherwise).
ReflectionResult reflect_neumann_circle(const HarmonicPair& v, const BivariateLaurentExpr& phi,
                                        const BiPoint& p, double cut_margin = kDefaultCutMargin);

ReflectionResult reflect_robin_circle(const HarmonicPair& w, const BivariateLaurentExpr& phi_w,
                                      const RobinParams& params, double r, double theta,
                                      double cut_margin = kDefaultCutMargin);

/// The data term -(1/b) int_{1/r}^{r} phi_w(...)/rho d rho (or, with b = 1,
/// the Neumann correction), exact.
Complex circle_data_integral(const BivariateLaurentExpr& phi, double r, double theta,
                             double cut_margin = kDefaultCutMargin);

ReflectionResult reflect_neumann_schwarz(const FieldFn& v, const BivariateLaurentExpr& phi,
                                         const SchwarzMap& map, const BiPoint& p,
                                         const QuadratureConfig& quad = {});
ReflectionResult reflect_neumann_schwarz(const HarmonicPair& v, const BivariateLaurentExpr& phi,
                                         const SchwarzMap& map, const BiPoint& p,
                                         const QuadratureConfig& quad = {});

/// Correction of the general-arc Neumann formula by quadrature.
Complex schwarz_data_integral(const BivariateLaurentExpr& phi, const SchwarzMap& map, const BiPoint& p,
                              const QuadratureConfig& quad = {});

} // namespace harmonia
