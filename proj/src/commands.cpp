#include "harmonia/commands.hpp"

#include "harmonia/error.hpp"
#include "harmonia/examples.hpp"
#include "harmonia/operators.hpp"
#include "harmonia/reflection.hpp"
#include "harmonia/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace harmonia {

namespace {

std::string num(double v, const char* spec = "%.15g")
{
    if (!std::isfinite(v)) {
        return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string pad(std::string s, std::size_t width)
{
    if (s.size() < width) {
        s.append(width - s.size(), ' ');
    }
    return s;
}

std::string lpad(std::string s, std::size_t width)
{
    if (s.size() < width) {
        s.insert(0, width - s.size(), ' ');
    }
    return s;
}

// nlohmann type errors on well-formed but mistyped JSON count as parse errors.
template <typename F>
CommandResult guarded(F&& body)
{
    try {
        return body();
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("malformed input: ") + e.what());
    }
}

OutputFormat resolve(OutputFormat f, OutputFormat fallback)
{
    return f == OutputFormat::Default ? fallback : f;
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

Json example_to_json(const ExampleRow& row)
{
    Json j = {{"id", row.id},
              {"title", row.title},
              {"status", std::string(status_name(row.status))},
              {"points", row.points},
              {"max_residual", row.max_residual},
              {"tolerance", row.tolerance},
              {"sample",
               {{"r", row.sample_r},
                {"theta", row.sample_theta},
                {"expected", row.sample_expected},
                {"computed", to_json(row.sample_computed)}}}};
    if (row.printed_residual) {
        j["printed_residual"] = *row.printed_residual;
    }
    if (row.shadow_residual) {
        j["quadrature_residual"] = *row.shadow_residual;
    }
    if (!row.note.empty()) {
        j["note"] = row.note;
    }
    return j;
}

} // namespace

Grid Grid::parse(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        parts.push_back(item);
    }
    if (parts.size() != 6) {
        throw Error(ErrorCode::InvalidArgument, "grid must be rmin:rmax:nr:tmin:tmax:nt");
    }
    Grid g;
    try {
        std::size_t used = 0;
        auto real = [&](const std::string& s) {
            const double v = std::stod(s, &used);
            if (used != s.size()) {
                throw std::invalid_argument(s);
            }
            return v;
        };
        auto count = [&](const std::string& s) {
            const int v = std::stoi(s, &used);
            if (used != s.size()) {
                throw std::invalid_argument(s);
            }
            return v;
        };
        g.r_min = real(parts[0]);
        g.r_max = real(parts[1]);
        g.n_r = count(parts[2]);
        g.theta_min = real(parts[3]);
        g.theta_max = real(parts[4]);
        g.n_theta = count(parts[5]);
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::InvalidArgument, "grid '" + text + "' has a malformed number");
    }
    g.validate();
    return g;
}

void Grid::validate() const
{
    if (n_r < 2 || n_theta < 2) {
        throw Error(ErrorCode::InvalidArgument, "grid counts must be at least 2");
    }
    if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max)) {
        throw Error(ErrorCode::InvalidArgument, "grid needs 0 < rmin < rmax");
    }
    if (!(theta_max > theta_min) || !std::isfinite(theta_min) || !std::isfinite(theta_max)) {
        throw Error(ErrorCode::InvalidArgument, "grid needs tmin < tmax");
    }
}

CommandResult cmd_examples(const std::string& fixture_text, const RunOptions& opts)
{
    return guarded([&] {
        ExampleOptions eo;
        eo.tolerance = opts.tolerance;
        eo.cut_angle = opts.cut_angle;
        const auto rows = run_examples(parse_json(fixture_text), eo);

        int passed = 0;
        int flagged = 0;
        int failed = 0;
        for (const auto& r : rows) {
            passed += r.status == ExampleRow::Status::Pass;
            flagged += r.status == ExampleRow::Status::Discrepancy;
            failed += r.status == ExampleRow::Status::Fail;
        }

        CommandResult res;
        res.exit_code = failed == 0 ? 0 : 1;
        std::string out;
        switch (resolve(opts.format, OutputFormat::Table)) {
        case OutputFormat::Json: {
            Json list = Json::array();
            for (const auto& r : rows) {
                list.push_back(example_to_json(r));
            }
            out = dump({{"examples", list}, {"passed", passed}, {"discrepancies", flagged}, {"failed", failed}});
            break;
        }
        case OutputFormat::Csv:
            out = "id,status,points,max_residual,tolerance,sample_r,sample_theta,expected,computed,printed_residual\n";
            for (const auto& r : rows) {
                out += r.id + "," + std::string(status_name(r.status)) + "," + std::to_string(r.points) + "," +
                       num(r.max_residual) + "," + num(r.tolerance) + "," + num(r.sample_r) + "," +
                       num(r.sample_theta) + "," + num(r.sample_expected) + "," + num(r.sample_computed.real()) +
                       "," + (r.printed_residual ? num(*r.printed_residual) : "") + "\n";
            }
            break;
        default: {
            out = pad("example", 28) + pad("status", 13) + lpad("points", 6) + lpad("max_residual", 14) +
                  lpad("tolerance", 11) + lpad("expected", 16) + lpad("computed", 16) + lpad("printed_res", 13) +
                  "\n";
            for (const auto& r : rows) {
                out += pad(r.id, 28) + pad(std::string(status_name(r.status)), 13) +
                       lpad(std::to_string(r.points), 6) + lpad(num(r.max_residual, "%.3e"), 14) +
                       lpad(num(r.tolerance, "%.0e"), 11) + lpad(num(r.sample_expected, "%.10f"), 16) +
                       lpad(num(r.sample_computed.real(), "%.10f"), 16) +
                       lpad(r.printed_residual ? num(*r.printed_residual, "%.3e") : "-", 13) + "\n";
            }
            out += "values sampled at r = 0.8, theta = 0.5\n";
            for (const auto& r : rows) {
                if (!r.note.empty()) {
                    out += r.id + ": " + r.note + "\n";
                }
            }
            out += std::to_string(passed) + " passed, " + std::to_string(flagged) + " discrepancy, " +
                   std::to_string(failed) + " failed\n";
        }
        }
        res.output = std::move(out);
        return res;
    });
}

CommandResult cmd_verify(const std::optional<std::string>& fixture_text,
                         const std::optional<std::vector<std::string>>& select, const RunOptions& opts)
{
    return guarded([&] {
        SuiteOptions so;
        so.seed = opts.seed;
        so.select = select;
        so.golden_tolerance = opts.tolerance;
        so.cut_angle = opts.cut_angle;
        if (fixture_text) {
            so.fixture = parse_json(*fixture_text);
        }
        const VerificationReport report = run_verification_suite(so);

        CommandResult res;
        res.exit_code = report.all_pass() ? 0 : 1;
        if (resolve(opts.format, OutputFormat::Json) == OutputFormat::Csv) {
            res.output = "name,tag,max_residual,tolerance,pass,instances\n";
            for (const auto& c : report.checks) {
                res.output += c.name + "," + c.tag + "," + num(c.max_residual) + "," + num(c.tolerance) + "," +
                              (c.pass ? "true" : "false") + "," + std::to_string(c.instances) + "\n";
            }
        } else {
            res.output = dump(to_json(report));
        }
        return res;
    });
}

CommandResult cmd_field(const std::string& input_text, const std::string& field, const Grid& grid,
                        const RunOptions& opts)
{
    return guarded([&] {
        grid.validate();
        const Json input = parse_json(input_text);
        if (!input.is_object() || !input.contains("solution")) {
            throw Error(ErrorCode::Parse, "field input needs a 'solution' pair");
        }
        const HarmonicPair pair = pair_from_json(input.at("solution"), opts.cut_angle);
        const RobinParams params = input.contains("params") ? params_from_json(input.at("params")) : RobinParams{};

        std::function<Complex(double, double)> value;
        HarmonicPair derived;
        BivariateLaurentExpr data;
        if (field == "input") {
            derived = pair;
        } else if (field == "dtn") {
            derived = neumann_from_dirichlet_pair(pair);
        } else if (field == "rtn") {
            derived = neumann_from_robin_pair(pair, params);
        } else if (field == "dfr") {
            derived = dirichlet_from_robin_pair(pair, params);
        } else if (field == "reflected") {
            if (!input.contains("data")) {
                throw Error(ErrorCode::Parse, "reflected field needs boundary 'data'");
            }
            data = boundary_data_from_json(input.at("data"), params);
            const bool robin = input.contains("params");
            // Value at q from the formula applied at the mirror point of q.
            value = [&, robin](double r, double t) {
                const ReflectionResult res = robin ? reflect_robin_circle(pair, data, params, 1.0 / r, t)
                                                   : reflect_neumann_circle(pair, data, 1.0 / r, t);
                return res.value;
            };
        } else {
            throw Error(ErrorCode::InvalidArgument, "unknown field '" + field + "'");
        }
        if (!value) {
            value = [&](double r, double t) { return eval_pair(derived, BiPoint::polar(r, t)); };
        }

        const bool csv = resolve(opts.format, OutputFormat::Csv) != OutputFormat::Json;
        std::string out = csv ? "r,theta,x,y,value,reason\n" : "";
        Json rows = Json::array();
        for (int i = 0; i < grid.n_r; ++i) {
            const double r = grid.r_min + (grid.r_max - grid.r_min) * i / (grid.n_r - 1);
            for (int j = 0; j < grid.n_theta; ++j) {
                const double t = grid.theta_min + (grid.theta_max - grid.theta_min) * j / (grid.n_theta - 1);
                const double x = r * std::cos(t);
                const double y = r * std::sin(t);
                std::optional<double> v;
                std::string reason;
                try {
                    v = value(r, t).real();
                } catch (const Error& e) {
                    reason = std::string(error_code_name(e.code()));
                }
                if (csv) {
                    out += num(r) + "," + num(t) + "," + num(x) + "," + num(y) + "," + (v ? num(*v) : "null") +
                           "," + reason + "\n";
                } else {
                    Json row = {{"r", r}, {"theta", t}, {"x", x}, {"y", y}};
                    row["value"] = v ? Json(*v) : Json(nullptr);
                    if (!reason.empty()) {
                        row["reason"] = reason;
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
        CommandResult res;
        res.output = csv ? out : dump({{"field", field}, {"rows", rows}});
        return res;
    });
}

CommandResult cmd_reflect(const std::string& input_text, const std::string& formula_arg,
                          const std::optional<BiPoint>& point_arg, bool check, const RunOptions& opts)
{
    return guarded([&] {
        const Json input = parse_json(input_text);
        if (!input.is_object() || !input.contains("solution")) {
            throw Error(ErrorCode::Parse, "reflect input needs a 'solution' pair");
        }
        std::string formula = formula_arg;
        if (formula.empty()) {
            formula = input.value("formula", "");
        }
        const HarmonicPair pair = pair_from_json(input.at("solution"), opts.cut_angle);
        const RobinParams params = input.contains("params") ? params_from_json(input.at("params")) : RobinParams{};
        const BivariateLaurentExpr data =
            input.contains("data") ? boundary_data_from_json(input.at("data"), params) : BivariateLaurentExpr{};
        const SchwarzMap map = input.contains("map") ? map_from_json(input.at("map")) : SchwarzMap::unit_circle();
        std::optional<BiPoint> point = point_arg;
        if (!point) {
            if (!input.contains("point")) {
                throw Error(ErrorCode::Parse, "reflect input needs a 'point'");
            }
            point = point_from_json(input.at("point"));
        }

        auto on_unit_circle = [&] {
            if (map.kind() != SchwarzMap::Kind::UnitCircle) {
                throw Error(ErrorCode::InvalidArgument, "formula '" + formula + "' is for the unit circle");
            }
            if (!point->is_real_slice(1e-12)) {
                throw Error(ErrorCode::InvalidArgument, "formula '" + formula + "' needs a real-slice point");
            }
        };

        ReflectionResult result;
        if (formula == "dirichlet") {
            result = reflect_dirichlet_study(pair, data, map, *point);
        } else if (formula == "neumann") {
            on_unit_circle();
            result = reflect_neumann_circle(pair, data, *point);
        } else if (formula == "robin") {
            on_unit_circle();
            if (!input.contains("params")) {
                throw Error(ErrorCode::Parse, "robin formula needs 'params'");
            }
            result = reflect_robin_circle(pair, data, params, std::abs(point->z), std::arg(point->z));
        } else if (formula == "schwarz") {
            result = reflect_neumann_schwarz(pair, data, map, *point);
        } else {
            throw Error(ErrorCode::InvalidArgument,
                        "formula must be one of dirichlet, neumann, robin, schwarz (got '" + formula + "')");
        }

        CommandResult res;
        Json j = to_json(result);
        if (check) {
            const Complex direct = eval_pair(pair, result.reflected_point);
            const double residual = std::abs(result.value - direct);
            const double tol = opts.tolerance.value_or(1e-10);
            j["check"] = {{"direct", to_json(direct)},
                          {"residual", residual},
                          {"tolerance", tol},
                          {"pass", residual <= tol}};
            res.exit_code = residual <= tol ? 0 : 1;
        }
        if (resolve(opts.format, OutputFormat::Json) == OutputFormat::Csv) {
            res.output = "formula,z_re,z_im,zeta_re,zeta_im,value_re,value_im,correction_re,correction_im";
            res.output += check ? ",residual\n" : "\n";
            res.output += std::string(formula_name(result.formula)) + "," + num(result.point.z.real()) + "," +
                          num(result.point.z.imag()) + "," + num(result.point.zeta.real()) + "," +
                          num(result.point.zeta.imag()) + "," + num(result.value.real()) + "," +
                          num(result.value.imag()) + "," + num(result.correction.real()) + "," +
                          num(result.correction.imag());
            res.output += check ? "," + num(j["check"]["residual"].get<double>()) + "\n" : "\n";
        } else {
            res.output = dump(j);
        }
        return res;
    });
}

} // namespace harmonia
