#pragma once

// JSON encodings used by the CLI and the fixtures.
//
//   complex      {"re": x, "im": y}  (a bare number is accepted on input)
//   expression   [{"re", "im", "k", "m"}, ...]  (absent fields are zero)
//   bivariate    [{"re", "im", "kz", "kzeta"}, ...]
//   pair         {"part_z": expr, "part_zeta": expr, "cut_angle"?} or {"symmetric": expr, "cut_angle"?}
//   map          {"kind": "unit_circle"} | {"kind": "circle", "center", "radius"}
//                | {"kind": "line", "point", "angle"}
//   point        {"r", "theta"} | {"x", "y"} | {"z", "zeta"}
//   params       {"a", "b"} or [a, b]
//
// Malformed input raises Error(Parse).

#include "harmonia/algebra.hpp"
#include "harmonia/geometry.hpp"
#include "harmonia/harmonic.hpp"
#include "harmonia/reflection.hpp"

#include <json.hpp>

#include <string>

namespace harmonia {

using Json = nlohmann::json;

Json to_json(Complex c);
Json to_json(const LogLaurentExpr& e);
Json to_json(const BivariateLaurentExpr& e);
Json to_json(const HarmonicPair& h);
Json to_json(const SchwarzMap& map);
Json to_json(const BiPoint& p);
Json to_json(const ReflectionResult& r);

Complex complex_from_json(const Json& j);
LogLaurentExpr expr_from_json(const Json& j, double cut_angle = kDefaultCutAngle);
BivariateLaurentExpr bivariate_from_json(const Json& j);
/// The pair's own "cut_angle" wins over `default_cut`.
HarmonicPair pair_from_json(const Json& j, double default_cut = kDefaultCutAngle);
SchwarzMap map_from_json(const Json& j);
BiPoint point_from_json(const Json& j);
RobinParams params_from_json(const Json& j);
/// Boundary data as a bivariate array, or as {"const", "a", "b"} arrays
/// combined with the Robin parameters: const + a * A + b * B.
BivariateLaurentExpr boundary_data_from_json(const Json& j, const RobinParams& params = {});

/// Parses text, mapping syntax errors to Error(Parse).
Json parse_json(const std::string& text);

} // namespace harmonia
