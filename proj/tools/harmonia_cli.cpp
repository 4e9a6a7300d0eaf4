// harmonia: command-line front end over the C API.
//
// Exit codes: 0 success, 1 a check failed, 2 malformed input or usage.

#include "harmonia/harmonia.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#ifndef HARMONIA_DEFAULT_FIXTURE
#define HARMONIA_DEFAULT_FIXTURE "fixtures/examples.json"
#endif

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

struct InputError {
    std::string message;
};

// Inline JSON when the argument starts with '{', otherwise a file path.
std::string load_input(const std::string& arg)
{
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') {
        return arg;
    }
    std::ifstream in(arg);
    if (!in) {
        throw InputError{"cannot read '" + arg + "'"};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

harmonia_format format_of(const std::string& name)
{
    if (name == "json") {
        return HARMONIA_FORMAT_JSON;
    }
    if (name == "csv") {
        return HARMONIA_FORMAT_CSV;
    }
    if (name == "table") {
        return HARMONIA_FORMAT_TABLE;
    }
    return HARMONIA_FORMAT_DEFAULT;
}

int finish(harmonia_status status, char* text, int exit_code, const std::string& output_path)
{
    if (status != HARMONIA_OK) {
        std::cerr << "harmonia: " << harmonia_status_name(status) << ": " << harmonia_last_error() << "\n";
        return status == HARMONIA_ERR_PARSE || status == HARMONIA_ERR_INVALID_ARGUMENT ? kExitInput
                                                                                       : kExitFailure;
    }
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output_path, std::ios::binary);
        out << text;
        if (!out) {
            harmonia_string_free(text);
            std::cerr << "harmonia: cannot write '" << output_path << "'\n";
            return kExitInput;
        }
    }
    harmonia_string_free(text);
    return exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Reflection formulas and boundary-condition operators for harmonic functions"};
    app.require_subcommand(1);

    std::optional<double> tol;
    std::uint64_t seed = 0;
    std::string format;
    std::string output;
    app.add_option("--tol", tol, "Tolerance override");
    auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized checks");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--output", output, "Write output to this file instead of stdout");

    std::string input;
    std::string formula;
    std::string grid_text = "0.5:1.5:11:-3:3:13";
    std::string field = "input";
    std::string select;
    bool check = false;
    bool no_fixture = false;
    std::optional<double> r;
    std::optional<double> theta;

    auto* examples = app.add_subcommand("examples", "Reproduce the golden examples");
    examples->add_option("--input", input, "Fixture file")->default_str(HARMONIA_DEFAULT_FIXTURE);

    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--input", input, "Fixture file for the golden rows");
    verify->add_flag("--no-fixture", no_fixture, "Skip the golden rows");
    verify->add_option("--select", select, "Comma-separated check-name prefixes");

    auto* field_cmd = app.add_subcommand("field", "Sample a field over a polar grid");
    field_cmd->add_option("--input", input, "Input file or inline JSON")->required();
    field_cmd->add_option("--field", field, "Field to sample")
        ->check(CLI::IsMember({"input", "dtn", "rtn", "dfr", "reflected"}));
    field_cmd->add_option("--grid", grid_text, "rmin:rmax:nr:tmin:tmax:nt");

    auto* reflect = app.add_subcommand("reflect", "Evaluate a reflection formula");
    reflect->add_option("--input", input, "Input file or inline JSON")->required();
    reflect->add_option("--formula", formula, "Reflection formula")
        ->check(CLI::IsMember({"dirichlet", "neumann", "robin", "schwarz"}));
    reflect->add_option("--r", r, "Radius of the point (overrides the input)");
    reflect->add_option("--theta", theta, "Angle of the point");
    reflect->add_flag("--check", check, "Compare against the solution at the reflected point");

    for (auto* sub : {examples, verify, field_cmd, reflect}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    harmonia_options opts;
    harmonia_options_init(&opts);
    if (tol) {
        opts.has_tolerance = 1;
        opts.tolerance = *tol;
    }
    if (seed_opt->count() > 0) {
        opts.seed = seed;
    }
    opts.format = format_of(format);
    if (const char* cut = std::getenv("HARMONIA_CUT_ANGLE"); cut != nullptr && *cut != '\0') {
        char* end = nullptr;
        const double angle = std::strtod(cut, &end);
        if (end == cut || *end != '\0' || !std::isfinite(angle)) {
            std::cerr << "harmonia: HARMONIA_CUT_ANGLE is not a number: '" << cut << "'\n";
            return kExitInput;
        }
        opts.cut_angle = angle;
    }

    char* text = nullptr;
    int exit_code = 0;
    harmonia_status status = HARMONIA_OK;
    try {
        if (*examples) {
            const std::string fixture = load_input(input.empty() ? HARMONIA_DEFAULT_FIXTURE : input);
            status = harmonia_cmd_examples(fixture.c_str(), &opts, &text, &exit_code);
        } else if (*verify) {
            std::optional<std::string> fixture;
            if (!no_fixture) {
                fixture = load_input(input.empty() ? HARMONIA_DEFAULT_FIXTURE : input);
            }
            status = harmonia_cmd_verify(fixture ? fixture->c_str() : nullptr, select.empty() ? nullptr : select.c_str(),
                                         &opts, &text, &exit_code);
        } else if (*field_cmd) {
            harmonia_grid grid;
            status = harmonia_grid_parse(grid_text.c_str(), &grid);
            if (status == HARMONIA_OK) {
                const std::string body = load_input(input);
                status = harmonia_cmd_field(body.c_str(), field.c_str(), &grid, &opts, &text, &exit_code);
            }
        } else if (*reflect) {
            const std::string body = load_input(input);
            std::optional<harmonia_complex> z;
            if (r) {
                const double t = theta.value_or(0.0);
                z = harmonia_complex{*r * std::cos(t), *r * std::sin(t)};
            } else if (theta) {
                std::cerr << "harmonia: --theta needs --r\n";
                return kExitInput;
            }
            status = harmonia_cmd_reflect(body.c_str(), formula.c_str(), z ? &*z : nullptr, nullptr, check ? 1 : 0,
                                          &opts, &text, &exit_code);
        }
    } catch (const InputError& e) {
        std::cerr << "harmonia: " << e.message << "\n";
        return kExitInput;
    }
    return finish(status, text, exit_code, output);
}
