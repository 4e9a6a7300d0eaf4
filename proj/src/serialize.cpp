#include "harmonia/serialize.hpp"

#include "harmonia/error.hpp"

#include <cmath>
#include <numbers>

namespace harmonia {

namespace {

[[noreturn]] void bad(const std::string& what)
{
    throw Error(ErrorCode::Parse, what);
}

double number(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        bad(std::string("missing field '") + key + "'");
    }
    const Json& v = j.at(key);
    if (!v.is_number()) {
        bad(std::string("field '") + key + "' must be a number");
    }
    return v.get<double>();
}

double number_or(const Json& j, const char* key, double fallback)
{
    return j.contains(key) ? number(j, key) : fallback;
}

int integer(const Json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        bad(std::string("field '") + key + "' must be an integer");
    }
    return j.at(key).get<int>();
}

// Absent powers default to zero.
int integer_or_zero(const Json& j, const char* key)
{
    return j.contains(key) ? integer(j, key) : 0;
}

} // namespace

Json to_json(Complex c)
{
    // Adding +0.0 turns -0.0 into 0.0.
    return {{"re", c.real() + 0.0}, {"im", c.imag() + 0.0}};
}

Json to_json(const LogLaurentExpr& e)
{
    Json out = Json::array();
    for (const auto& t : e.term_list()) {
        out.push_back({{"re", t.coeff.real()}, {"im", t.coeff.imag()}, {"k", t.power}, {"m", t.logpow}});
    }
    return out;
}

Json to_json(const BivariateLaurentExpr& e)
{
    Json out = Json::array();
    for (const auto& t : e.term_list()) {
        out.push_back({{"re", t.coeff.real()}, {"im", t.coeff.imag()}, {"kz", t.zpow}, {"kzeta", t.zetapow}});
    }
    return out;
}

Json to_json(const HarmonicPair& h)
{
    return {{"part_z", to_json(h.part_z())},
            {"part_zeta", to_json(h.part_zeta())},
            {"cut_angle", h.part_z().cut_angle()}};
}

Json to_json(const SchwarzMap& map)
{
    switch (map.kind()) {
    case SchwarzMap::Kind::UnitCircle:
        return {{"kind", "unit_circle"}};
    case SchwarzMap::Kind::Circle:
        return {{"kind", "circle"}, {"center", to_json(map.center())}, {"radius", map.radius()}};
    case SchwarzMap::Kind::Line:
        return {{"kind", "line"}, {"point", to_json(map.point())}, {"angle", map.angle()}};
    case SchwarzMap::Kind::Custom:
        break;
    }
    return {{"kind", "custom"}, {"name", map.curve().name()}};
}

Json to_json(const BiPoint& p)
{
    return {{"z", to_json(p.z)}, {"zeta", to_json(p.zeta)}};
}

Json to_json(const ReflectionResult& r)
{
    Json out = {{"formula", std::string(formula_name(r.formula))},
                {"point", to_json(r.point)},
                {"reflected", to_json(r.reflected_point)},
                {"value", to_json(r.value)},
                {"correction", to_json(r.correction)}};
    if (r.formula == ReflectionFormula::RobinCircle) {
        out["data_correction"] = to_json(r.data_correction);
        out["self_correction"] = to_json(r.self_correction);
    }
    return out;
}

Complex complex_from_json(const Json& j)
{
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_object()) {
        bad("complex value must be a number or {re, im}");
    }
    return {number_or(j, "re", 0.0), number_or(j, "im", 0.0)};
}

LogLaurentExpr expr_from_json(const Json& j, double cut_angle)
{
    if (!j.is_array()) {
        bad("expression must be an array of terms");
    }
    LogLaurentExpr e(cut_angle);
    for (const auto& t : j) {
        if (!t.is_object()) {
            bad("expression term must be an object");
        }
        const int m = integer_or_zero(t, "m");
        if (m < 0) {
            bad("log power must be non-negative");
        }
        e.add_term({number_or(t, "re", 0.0), number_or(t, "im", 0.0)}, integer_or_zero(t, "k"), m);
    }
    return e;
}

BivariateLaurentExpr bivariate_from_json(const Json& j)
{
    if (!j.is_array()) {
        bad("bivariate expression must be an array of terms");
    }
    BivariateLaurentExpr e;
    for (const auto& t : j) {
        if (!t.is_object()) {
            bad("bivariate term must be an object");
        }
        e.add_term({number_or(t, "re", 0.0), number_or(t, "im", 0.0)}, integer_or_zero(t, "kz"),
                   integer_or_zero(t, "kzeta"));
    }
    return e;
}

HarmonicPair pair_from_json(const Json& j, double default_cut)
{
    if (!j.is_object()) {
        bad("pair must be an object");
    }
    const double cut = number_or(j, "cut_angle", default_cut);
    if (j.contains("symmetric")) {
        return HarmonicPair::symmetric(expr_from_json(j.at("symmetric"), cut));
    }
    if (!j.contains("part_z") || !j.contains("part_zeta")) {
        bad("pair needs part_z and part_zeta (or symmetric)");
    }
    return {expr_from_json(j.at("part_z"), cut),
            expr_from_json(j.at("part_zeta"), 2.0 * std::numbers::pi - cut)};
}

SchwarzMap map_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
        bad("map needs a string 'kind'");
    }
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "unit_circle") {
        return SchwarzMap::unit_circle();
    }
    if (kind == "circle") {
        const Complex c = j.contains("center") ? complex_from_json(j.at("center")) : Complex{};
        return SchwarzMap::circle(c, number(j, "radius"));
    }
    if (kind == "line") {
        const Complex p = j.contains("point") ? complex_from_json(j.at("point")) : Complex{};
        return SchwarzMap::line(p, number_or(j, "angle", 0.0));
    }
    bad("unknown map kind '" + kind + "'");
}

BiPoint point_from_json(const Json& j)
{
    if (!j.is_object()) {
        bad("point must be an object");
    }
    if (j.contains("r")) {
        return BiPoint::polar(number(j, "r"), number_or(j, "theta", 0.0));
    }
    if (j.contains("x")) {
        return BiPoint::real_slice({number(j, "x"), number_or(j, "y", 0.0)});
    }
    if (j.contains("z") && j.contains("zeta")) {
        return {complex_from_json(j.at("z")), complex_from_json(j.at("zeta"))};
    }
    bad("point needs {r, theta}, {x, y} or {z, zeta}");
}

RobinParams params_from_json(const Json& j)
{
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return RobinParams::make(j[0].get<double>(), j[1].get<double>());
    }
    return RobinParams::make(number(j, "a"), number(j, "b"));
}

BivariateLaurentExpr boundary_data_from_json(const Json& j, const RobinParams& params)
{
    if (j.is_array()) {
        return bivariate_from_json(j);
    }
    if (!j.is_object()) {
        bad("boundary data must be an array or an object");
    }
    BivariateLaurentExpr out;
    if (j.contains("const")) {
        out += bivariate_from_json(j.at("const"));
    }
    if (j.contains("a")) {
        out += bivariate_from_json(j.at("a")) * Complex{params.a};
    }
    if (j.contains("b")) {
        out += bivariate_from_json(j.at("b")) * Complex{params.b};
    }
    return out;
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
    }
}

} // namespace harmonia
