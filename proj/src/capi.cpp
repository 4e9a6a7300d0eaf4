#include "harmonia/harmonia.h"

#include "harmonia/commands.hpp"
#include "harmonia/error.hpp"
#include "harmonia/operators.hpp"
#include "harmonia/reflection.hpp"
#include "harmonia/serialize.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct harmonia_pair {
    harmonia::HarmonicPair value;
};

struct harmonia_bivariate {
    harmonia::BivariateLaurentExpr value;
};

struct harmonia_map {
    harmonia::SchwarzMap value;
};

namespace {

thread_local std::string g_last_error;

harmonia_status status_of(harmonia::ErrorCode code)
{
    using harmonia::ErrorCode;
    switch (code) {
    case ErrorCode::Domain: return HARMONIA_ERR_DOMAIN;
    case ErrorCode::Pole: return HARMONIA_ERR_POLE;
    case ErrorCode::CutProximity: return HARMONIA_ERR_CUT_PROXIMITY;
    case ErrorCode::NonzeroMean: return HARMONIA_ERR_NONZERO_MEAN;
    case ErrorCode::Nonconvergence: return HARMONIA_ERR_NONCONVERGENCE;
    case ErrorCode::BranchPoint: return HARMONIA_ERR_BRANCH_POINT;
    case ErrorCode::SignValidation: return HARMONIA_ERR_SIGN_VALIDATION;
    case ErrorCode::UnsupportedResonance: return HARMONIA_ERR_UNSUPPORTED_RESONANCE;
    case ErrorCode::NonSymmetric: return HARMONIA_ERR_NON_SYMMETRIC;
    case ErrorCode::InvalidArgument: return HARMONIA_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return HARMONIA_ERR_PARSE;
    }
    return HARMONIA_ERR_INTERNAL;
}

template <typename F>
harmonia_status call(F&& body)
{
    try {
        body();
        g_last_error.clear();
        return HARMONIA_OK;
    } catch (const harmonia::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
    } catch (const std::exception& e) {
        g_last_error = e.what();
    } catch (...) {
        g_last_error = "unknown error";
    }
    return HARMONIA_ERR_INTERNAL;
}

void require(const void* p, const char* what)
{
    if (p == nullptr) {
        throw harmonia::Error(harmonia::ErrorCode::InvalidArgument, std::string(what) + " must not be null");
    }
}

char* copy_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

harmonia::Complex cx(harmonia_complex c) { return {c.re, c.im}; }
harmonia_complex cx(harmonia::Complex c) { return {c.real(), c.imag()}; }

void fill(const harmonia::ReflectionResult& r, harmonia_reflection* out)
{
    out->z = cx(r.point.z);
    out->zeta = cx(r.point.zeta);
    out->reflected_z = cx(r.reflected_point.z);
    out->reflected_zeta = cx(r.reflected_point.zeta);
    out->value = cx(r.value);
    out->correction = cx(r.correction);
    out->data_correction = cx(r.data_correction);
    out->self_correction = cx(r.self_correction);
}

harmonia::RunOptions run_options(const harmonia_options* opts)
{
    harmonia_options defaults;
    harmonia_options_init(&defaults);
    const harmonia_options& o = opts != nullptr ? *opts : defaults;
    harmonia::RunOptions ro;
    if (o.has_tolerance != 0) {
        ro.tolerance = o.tolerance;
    }
    ro.seed = o.seed;
    ro.cut_angle = o.cut_angle;
    switch (o.format) {
    case HARMONIA_FORMAT_TABLE: ro.format = harmonia::OutputFormat::Table; break;
    case HARMONIA_FORMAT_JSON: ro.format = harmonia::OutputFormat::Json; break;
    case HARMONIA_FORMAT_CSV: ro.format = harmonia::OutputFormat::Csv; break;
    default: ro.format = harmonia::OutputFormat::Default; break;
    }
    return ro;
}

void emit(const harmonia::CommandResult& res, char** out, int* exit_code)
{
    *out = copy_string(res.output);
    if (exit_code != nullptr) {
        *exit_code = res.exit_code;
    }
}

} // namespace

extern "C" {

const char* harmonia_version(void) { return "0.1.0"; }

const char* harmonia_status_name(harmonia_status status)
{
    switch (status) {
    case HARMONIA_OK: return "ok";
    case HARMONIA_ERR_DOMAIN: return "domain";
    case HARMONIA_ERR_POLE: return "pole";
    case HARMONIA_ERR_CUT_PROXIMITY: return "cut_proximity";
    case HARMONIA_ERR_NONZERO_MEAN: return "nonzero_mean";
    case HARMONIA_ERR_NONCONVERGENCE: return "nonconvergence";
    case HARMONIA_ERR_BRANCH_POINT: return "branch_point";
    case HARMONIA_ERR_SIGN_VALIDATION: return "sign_validation";
    case HARMONIA_ERR_UNSUPPORTED_RESONANCE: return "unsupported_resonance";
    case HARMONIA_ERR_NON_SYMMETRIC: return "non_symmetric";
    case HARMONIA_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case HARMONIA_ERR_PARSE: return "parse";
    case HARMONIA_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* harmonia_last_error(void) { return g_last_error.c_str(); }

void harmonia_string_free(char* s) { std::free(s); }

void harmonia_options_init(harmonia_options* opts)
{
    if (opts == nullptr) {
        return;
    }
    opts->has_tolerance = 0;
    opts->tolerance = 0.0;
    opts->seed = harmonia::kDefaultSeed;
    opts->cut_angle = harmonia::kDefaultCutAngle;
    opts->format = HARMONIA_FORMAT_DEFAULT;
}

harmonia_status harmonia_grid_parse(const char* text, harmonia_grid* out)
{
    return call([&] {
        require(text, "text");
        require(out, "out");
        const harmonia::Grid g = harmonia::Grid::parse(text);
        *out = {g.r_min, g.r_max, g.n_r, g.theta_min, g.theta_max, g.n_theta};
    });
}

harmonia_status harmonia_pair_from_json(const char* json, double cut_angle, harmonia_pair** out)
{
    return call([&] {
        require(json, "json");
        require(out, "out");
        *out = new harmonia_pair{harmonia::pair_from_json(harmonia::parse_json(json), cut_angle)};
    });
}

harmonia_status harmonia_pair_to_json(const harmonia_pair* pair, char** out)
{
    return call([&] {
        require(pair, "pair");
        require(out, "out");
        *out = copy_string(harmonia::to_json(pair->value).dump());
    });
}

void harmonia_pair_free(harmonia_pair* pair) { delete pair; }

harmonia_status harmonia_pair_eval(const harmonia_pair* pair, harmonia_complex z, harmonia_complex zeta,
                                   harmonia_complex* out)
{
    return call([&] {
        require(pair, "pair");
        require(out, "out");
        *out = cx(harmonia::eval_pair(pair->value, {cx(z), cx(zeta)}));
    });
}

harmonia_status harmonia_bivariate_from_json(const char* json, harmonia_bivariate** out)
{
    return call([&] {
        require(json, "json");
        require(out, "out");
        *out = new harmonia_bivariate{harmonia::bivariate_from_json(harmonia::parse_json(json))};
    });
}

void harmonia_bivariate_free(harmonia_bivariate* phi) { delete phi; }

harmonia_status harmonia_bivariate_eval(const harmonia_bivariate* phi, harmonia_complex z, harmonia_complex zeta,
                                        harmonia_complex* out)
{
    return call([&] {
        require(phi, "phi");
        require(out, "out");
        *out = cx(phi->value.eval(cx(z), cx(zeta)));
    });
}

harmonia_status harmonia_map_from_json(const char* json, harmonia_map** out)
{
    return call([&] {
        require(json, "json");
        require(out, "out");
        *out = new harmonia_map{harmonia::map_from_json(harmonia::parse_json(json))};
    });
}

void harmonia_map_free(harmonia_map* map) { delete map; }

harmonia_status harmonia_map_value(const harmonia_map* map, harmonia_complex z, harmonia_complex* out)
{
    return call([&] {
        require(map, "map");
        require(out, "out");
        *out = cx(map->value.value(cx(z)));
    });
}

harmonia_status harmonia_neumann_from_dirichlet(const harmonia_pair* u, harmonia_complex z0, double value_at_base,
                                                harmonia_pair** out)
{
    return call([&] {
        require(u, "u");
        require(out, "out");
        *out = new harmonia_pair{harmonia::neumann_from_dirichlet_pair(u->value, {cx(z0), value_at_base})};
    });
}

harmonia_status harmonia_neumann_from_robin(const harmonia_pair* w, double a, double b, harmonia_complex z0,
                                            double value_at_base, harmonia_pair** out)
{
    return call([&] {
        require(w, "w");
        require(out, "out");
        *out = new harmonia_pair{
            harmonia::neumann_from_robin_pair(w->value, harmonia::RobinParams::make(a, b), {cx(z0), value_at_base})};
    });
}

harmonia_status harmonia_dirichlet_from_robin(const harmonia_pair* w, double a, double b, harmonia_pair** out)
{
    return call([&] {
        require(w, "w");
        require(out, "out");
        *out = new harmonia_pair{harmonia::dirichlet_from_robin_pair(w->value, harmonia::RobinParams::make(a, b))};
    });
}

harmonia_status harmonia_reflect_dirichlet(const harmonia_pair* u, const harmonia_bivariate* phi,
                                           const harmonia_map* map, harmonia_complex z, harmonia_complex zeta,
                                           harmonia_reflection* out)
{
    return call([&] {
        require(u, "u");
        require(phi, "phi");
        require(map, "map");
        require(out, "out");
        fill(harmonia::reflect_dirichlet_study(u->value, phi->value, map->value, {cx(z), cx(zeta)}), out);
    });
}

harmonia_status harmonia_reflect_neumann_circle(const harmonia_pair* v, const harmonia_bivariate* phi, double r,
                                                double theta, harmonia_reflection* out)
{
    return call([&] {
        require(v, "v");
        require(phi, "phi");
        require(out, "out");
        fill(harmonia::reflect_neumann_circle(v->value, phi->value, r, theta), out);
    });
}

harmonia_status harmonia_reflect_robin_circle(const harmonia_pair* w, const harmonia_bivariate* phi, double a,
                                              double b, double r, double theta, harmonia_reflection* out)
{
    return call([&] {
        require(w, "w");
        require(phi, "phi");
        require(out, "out");
        fill(harmonia::reflect_robin_circle(w->value, phi->value, harmonia::RobinParams::make(a, b), r, theta), out);
    });
}

harmonia_status harmonia_reflect_neumann_schwarz(const harmonia_pair* v, const harmonia_bivariate* phi,
                                                 const harmonia_map* map, harmonia_complex z, harmonia_complex zeta,
                                                 harmonia_reflection* out)
{
    return call([&] {
        require(v, "v");
        require(phi, "phi");
        require(map, "map");
        require(out, "out");
        fill(harmonia::reflect_neumann_schwarz(v->value, phi->value, map->value, {cx(z), cx(zeta)}), out);
    });
}

harmonia_status harmonia_cmd_examples(const char* fixture_json, const harmonia_options* opts, char** out,
                                      int* exit_code)
{
    return call([&] {
        require(fixture_json, "fixture_json");
        require(out, "out");
        emit(harmonia::cmd_examples(fixture_json, run_options(opts)), out, exit_code);
    });
}

harmonia_status harmonia_cmd_verify(const char* fixture_json, const char* select, const harmonia_options* opts,
                                    char** out, int* exit_code)
{
    return call([&] {
        require(out, "out");
        std::optional<std::string> fixture;
        if (fixture_json != nullptr) {
            fixture = fixture_json;
        }
        std::optional<std::vector<std::string>> prefixes;
        if (select != nullptr) {
            prefixes.emplace();
            std::string s(select);
            std::size_t start = 0;
            while (start <= s.size()) {
                const std::size_t comma = s.find(',', start);
                const std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
                if (!item.empty()) {
                    prefixes->push_back(item);
                }
                if (comma == std::string::npos) {
                    break;
                }
                start = comma + 1;
            }
        }
        emit(harmonia::cmd_verify(fixture, prefixes, run_options(opts)), out, exit_code);
    });
}

harmonia_status harmonia_cmd_field(const char* input_json, const char* field, const harmonia_grid* grid,
                                   const harmonia_options* opts, char** out, int* exit_code)
{
    return call([&] {
        require(input_json, "input_json");
        require(grid, "grid");
        require(out, "out");
        const harmonia::Grid g{grid->r_min, grid->r_max, grid->n_r, grid->theta_min, grid->theta_max, grid->n_theta};
        emit(harmonia::cmd_field(input_json, field != nullptr ? field : "input", g, run_options(opts)), out,
             exit_code);
    });
}

harmonia_status harmonia_cmd_reflect(const char* input_json, const char* formula, const harmonia_complex* point_z,
                                     const harmonia_complex* point_zeta, int check, const harmonia_options* opts,
                                     char** out, int* exit_code)
{
    return call([&] {
        require(input_json, "input_json");
        require(out, "out");
        std::optional<harmonia::BiPoint> point;
        if (point_z != nullptr) {
            const harmonia::Complex z = cx(*point_z);
            point = harmonia::BiPoint{z, point_zeta != nullptr ? cx(*point_zeta) : std::conj(z)};
        }
        emit(harmonia::cmd_reflect(input_json, formula != nullptr ? formula : "", point, check != 0,
                                   run_options(opts)),
             out, exit_code);
    });
}

} // extern "C"
