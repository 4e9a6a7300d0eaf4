#ifndef HARMONIA_H
#define HARMONIA_H

/*
 * C interface to libharmonia. Objects are opaque handles released with the
 * matching *_free function. Every call returns a status code; on failure a
 * description is available from harmonia_last_error() on the calling thread.
 * Strings returned through char** are released with harmonia_string_free().
 */

#include <stdint.h>

#if defined(_WIN32)
#define HARMONIA_API __declspec(dllexport)
#elif defined(__GNUC__)
#define HARMONIA_API __attribute__((visibility("default")))
#else
#define HARMONIA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum harmonia_status {
    HARMONIA_OK = 0,
    HARMONIA_ERR_DOMAIN,
    HARMONIA_ERR_POLE,
    HARMONIA_ERR_CUT_PROXIMITY,
    HARMONIA_ERR_NONZERO_MEAN,
    HARMONIA_ERR_NONCONVERGENCE,
    HARMONIA_ERR_BRANCH_POINT,
    HARMONIA_ERR_SIGN_VALIDATION,
    HARMONIA_ERR_UNSUPPORTED_RESONANCE,
    HARMONIA_ERR_NON_SYMMETRIC,
    HARMONIA_ERR_INVALID_ARGUMENT,
    HARMONIA_ERR_PARSE,
    HARMONIA_ERR_INTERNAL
} harmonia_status;

typedef enum harmonia_format {
    HARMONIA_FORMAT_DEFAULT = 0,
    HARMONIA_FORMAT_TABLE,
    HARMONIA_FORMAT_JSON,
    HARMONIA_FORMAT_CSV
} harmonia_format;

typedef struct harmonia_complex {
    double re;
    double im;
} harmonia_complex;

typedef struct harmonia_pair harmonia_pair;
typedef struct harmonia_bivariate harmonia_bivariate;
typedef struct harmonia_map harmonia_map;

typedef struct harmonia_reflection {
    harmonia_complex z;
    harmonia_complex zeta;
    harmonia_complex reflected_z;
    harmonia_complex reflected_zeta;
    harmonia_complex value;
    harmonia_complex correction;
    /* Robin only; zero otherwise. */
    harmonia_complex data_correction;
    harmonia_complex self_correction;
} harmonia_reflection;

typedef struct harmonia_options {
    int has_tolerance;
    double tolerance;
    uint64_t seed;
    double cut_angle;
    harmonia_format format;
} harmonia_options;

typedef struct harmonia_grid {
    double r_min;
    double r_max;
    int n_r;
    double theta_min;
    double theta_max;
    int n_theta;
} harmonia_grid;

HARMONIA_API const char* harmonia_version(void);
HARMONIA_API const char* harmonia_status_name(harmonia_status status);
HARMONIA_API const char* harmonia_last_error(void);
HARMONIA_API void harmonia_string_free(char* s);

/* Defaults: no tolerance override, the default seed, principal branch, default format. */
HARMONIA_API void harmonia_options_init(harmonia_options* opts);
/* Parses "rmin:rmax:nr:tmin:tmax:nt". */
HARMONIA_API harmonia_status harmonia_grid_parse(const char* text, harmonia_grid* out);

/* Handles from JSON text (see the README for the encodings). */
HARMONIA_API harmonia_status harmonia_pair_from_json(const char* json, double cut_angle, harmonia_pair** out);
HARMONIA_API harmonia_status harmonia_pair_to_json(const harmonia_pair* pair, char** out);
HARMONIA_API void harmonia_pair_free(harmonia_pair* pair);
HARMONIA_API harmonia_status harmonia_pair_eval(const harmonia_pair* pair, harmonia_complex z, harmonia_complex zeta,
                                                harmonia_complex* out);

HARMONIA_API harmonia_status harmonia_bivariate_from_json(const char* json, harmonia_bivariate** out);
HARMONIA_API void harmonia_bivariate_free(harmonia_bivariate* phi);
HARMONIA_API harmonia_status harmonia_bivariate_eval(const harmonia_bivariate* phi, harmonia_complex z,
                                                     harmonia_complex zeta, harmonia_complex* out);

HARMONIA_API harmonia_status harmonia_map_from_json(const char* json, harmonia_map** out);
HARMONIA_API void harmonia_map_free(harmonia_map* map);
HARMONIA_API harmonia_status harmonia_map_value(const harmonia_map* map, harmonia_complex z, harmonia_complex* out);

/* Boundary operators on the unit circle; the result is pinned so that v(z0, conj z0) = value_at_base. */
HARMONIA_API harmonia_status harmonia_neumann_from_dirichlet(const harmonia_pair* u, harmonia_complex z0,
                                                             double value_at_base, harmonia_pair** out);
HARMONIA_API harmonia_status harmonia_neumann_from_robin(const harmonia_pair* w, double a, double b,
                                                         harmonia_complex z0, double value_at_base,
                                                         harmonia_pair** out);
HARMONIA_API harmonia_status harmonia_dirichlet_from_robin(const harmonia_pair* w, double a, double b,
                                                           harmonia_pair** out);

/* Reflection formulas. */
HARMONIA_API harmonia_status harmonia_reflect_dirichlet(const harmonia_pair* u, const harmonia_bivariate* phi,
                                                        const harmonia_map* map, harmonia_complex z,
                                                        harmonia_complex zeta, harmonia_reflection* out);
HARMONIA_API harmonia_status harmonia_reflect_neumann_circle(const harmonia_pair* v, const harmonia_bivariate* phi,
                                                             double r, double theta, harmonia_reflection* out);
HARMONIA_API harmonia_status harmonia_reflect_robin_circle(const harmonia_pair* w, const harmonia_bivariate* phi,
                                                           double a, double b, double r, double theta,
                                                           harmonia_reflection* out);
HARMONIA_API harmonia_status harmonia_reflect_neumann_schwarz(const harmonia_pair* v, const harmonia_bivariate* phi,
                                                              const harmonia_map* map, harmonia_complex z,
                                                              harmonia_complex zeta, harmonia_reflection* out);

/*
 * Front-end commands. Inputs are JSON text; *out receives the rendered output
 * and *exit_code 0 (all checks passed) or 1 (a check failed).
 */
HARMONIA_API harmonia_status harmonia_cmd_examples(const char* fixture_json, const harmonia_options* opts,
                                                   char** out, int* exit_code);
/* fixture_json may be NULL (no golden rows). select is a comma-separated list
 * of check-name prefixes, or NULL for every check. */
HARMONIA_API harmonia_status harmonia_cmd_verify(const char* fixture_json, const char* select,
                                                 const harmonia_options* opts, char** out, int* exit_code);
HARMONIA_API harmonia_status harmonia_cmd_field(const char* input_json, const char* field, const harmonia_grid* grid,
                                                const harmonia_options* opts, char** out, int* exit_code);
/* formula may be NULL or empty to use the input's "formula"; point may be NULL. */
HARMONIA_API harmonia_status harmonia_cmd_reflect(const char* input_json, const char* formula,
                                                  const harmonia_complex* point_z, const harmonia_complex* point_zeta,
                                                  int check, const harmonia_options* opts, char** out,
                                                  int* exit_code);

#ifdef __cplusplus
}
#endif

#endif
