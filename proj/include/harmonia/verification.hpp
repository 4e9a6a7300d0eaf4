#pragma once

// Randomized invariant checks over every module, plus the golden fixture rows.
// Each check draws from its own generator seeded with (seed, check name), so
// results do not depend on which other checks were selected.

#include "harmonia/harmonic.hpp"
#include "harmonia/operators.hpp"
#include "harmonia/serialize.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace harmonia {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct CheckRecord {
    std::string name;
    /// "exact", "oracle", "property" or "golden".
    std::string tag;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    int instances = 0;
    /// Set when the check threw instead of producing a residual.
    std::string error;
};

struct VerificationReport {
    std::uint64_t seed = kDefaultSeed;
    std::vector<CheckRecord> checks;

    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0; }
};

/// The boundary operators under test. Swapping one out (for example for a
/// sign-flipped copy) must make the matching checks fail.
struct OperatorSet {
    std::function<HarmonicPair(const HarmonicPair&, const BasePointNormalization&)> dirichlet_to_neumann;
    std::function<HarmonicPair(const HarmonicPair&, const RobinParams&, const BasePointNormalization&)>
        robin_to_neumann;
    std::function<HarmonicPair(const HarmonicPair&, const RobinParams&)> dirichlet_from_robin;

    static OperatorSet standard();
};

struct SuiteOptions {
    std::uint64_t seed = kDefaultSeed;
    /// Name prefixes to run; nullopt runs everything, an empty list nothing.
    std::optional<std::vector<std::string>> select;
    OperatorSet ops = OperatorSet::standard();
    /// Golden fixture; its rows become "golden.<id>" checks.
    std::optional<Json> fixture;
    /// Overrides the tolerance of golden rows.
    std::optional<double> golden_tolerance;
    double cut_angle = kDefaultCutAngle;
};

/// Names of the built-in checks, in execution order.
std::vector<std::string> verification_catalogue();

VerificationReport run_verification_suite(const SuiteOptions& opts = {});

Json to_json(const VerificationReport& report);

} // namespace harmonia
