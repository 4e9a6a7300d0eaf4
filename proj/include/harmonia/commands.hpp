#pragma once

// The four front-end commands. Each takes JSON text and returns the rendered
// output plus an exit code (0 ok, 1 a check failed). Malformed input raises
// Error(Parse) or Error(InvalidArgument).

#include "harmonia/algebra.hpp"
#include "harmonia/geometry.hpp"
#include "harmonia/verification.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace harmonia {

enum class OutputFormat { Default, Table, Json, Csv };

struct RunOptions {
    std::optional<double> tolerance;
    std::uint64_t seed = kDefaultSeed;
    double cut_angle = kDefaultCutAngle;
    OutputFormat format = OutputFormat::Default;
};

struct CommandResult {
    std::string output;
    int exit_code = 0;
};

struct Grid {
    double r_min = 0.5;
    double r_max = 1.5;
    int n_r = 11;
    double theta_min = -3.0;
    double theta_max = 3.0;
    int n_theta = 13;

    /// Parses "rmin:rmax:nr:tmin:tmax:nt".
    static Grid parse(const std::string& text);
    void validate() const;
};

/// Default table; json and csv on request.
CommandResult cmd_examples(const std::string& fixture_text, const RunOptions& opts);

/// JSON report by default. `select` holds check-name prefixes.
CommandResult cmd_verify(const std::optional<std::string>& fixture_text,
                         const std::optional<std::vector<std::string>>& select, const RunOptions& opts);

/// field: input | dtn | rtn | dfr | reflected. CSV by default.
CommandResult cmd_field(const std::string& input_text, const std::string& field, const Grid& grid,
                        const RunOptions& opts);

/// formula: dirichlet | neumann | robin | schwarz (empty: taken from the input).
/// `point` overrides the input's point. JSON by default.
CommandResult cmd_reflect(const std::string& input_text, const std::string& formula,
                          const std::optional<BiPoint>& point, bool check, const RunOptions& opts);

} // namespace harmonia
