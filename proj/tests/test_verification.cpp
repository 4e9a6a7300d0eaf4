#include "harmonia/operators.hpp"
#include "harmonia/verification.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

using namespace harmonia;

namespace {

Json load_fixture()
{
    std::ifstream in(HARMONIA_FIXTURE);
    std::stringstream ss;
    ss << in.rdbuf();
    return Json::parse(ss.str());
}

const CheckRecord* find(const VerificationReport& r, const std::string& name)
{
    for (const auto& c : r.checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

} // namespace

TEST(Verification, FullSuitePasses)
{
    SuiteOptions opts;
    opts.fixture = load_fixture();
    const VerificationReport r = run_verification_suite(opts);
    for (const auto& c : r.checks) {
        EXPECT_TRUE(c.pass) << c.name << " residual " << c.max_residual << " tol " << c.tolerance << " " << c.error;
    }
    // One golden row also carries a quadrature shadow.
    EXPECT_EQ(r.checks.size(), verification_catalogue().size() + opts.fixture->at("examples").size() + 1);
}

TEST(Verification, CatalogueNamesAreUnique)
{
    const auto names = verification_catalogue();
    EXPECT_EQ(std::set<std::string>(names.begin(), names.end()).size(), names.size());
    EXPECT_GE(names.size(), 20u);
}

TEST(Verification, EmptySelectionIsEmptyAndPasses)
{
    SuiteOptions opts;
    opts.select = std::vector<std::string>{};
    const VerificationReport r = run_verification_suite(opts);
    EXPECT_TRUE(r.checks.empty());
    EXPECT_TRUE(r.all_pass());
}

TEST(Verification, SelectionByPrefix)
{
    SuiteOptions opts;
    opts.select = std::vector<std::string>{"algebra."};
    const VerificationReport r = run_verification_suite(opts);
    ASSERT_FALSE(r.checks.empty());
    for (const auto& c : r.checks) {
        EXPECT_EQ(c.name.rfind("algebra.", 0), 0u);
    }
}

TEST(Verification, SignFlippedOperatorFailsBoundaryRecovery)
{
    SuiteOptions opts;
    opts.select = std::vector<std::string>{"operators."};
    opts.ops.dirichlet_to_neumann = [](const HarmonicPair& u, const BasePointNormalization& n) {
        return Complex(-1.0) * neumann_from_dirichlet_pair(u, n);
    };
    opts.ops.robin_to_neumann = [](const HarmonicPair& w, const RobinParams& p, const BasePointNormalization& n) {
        return Complex(-1.0) * neumann_from_robin_pair(w, p, n);
    };
    const VerificationReport r = run_verification_suite(opts);
    const CheckRecord* dtn = find(r, "operators.dtn_boundary_recovery");
    const CheckRecord* rtn = find(r, "operators.rtn_boundary_recovery");
    ASSERT_NE(dtn, nullptr);
    ASSERT_NE(rtn, nullptr);
    EXPECT_FALSE(dtn->pass);
    EXPECT_FALSE(rtn->pass);
    EXPECT_FALSE(r.all_pass());
}

TEST(Verification, DeterministicForSeed)
{
    SuiteOptions opts;
    opts.select = std::vector<std::string>{"harmonic.", "reflection."};
    const std::string a = to_json(run_verification_suite(opts)).dump();
    const std::string b = to_json(run_verification_suite(opts)).dump();
    EXPECT_EQ(a, b);
}

TEST(Verification, ChecksIndependentOfSelection)
{
    SuiteOptions all;
    const VerificationReport full = run_verification_suite(all);
    SuiteOptions one;
    one.select = std::vector<std::string>{"operators.corollary_chain"};
    const VerificationReport single = run_verification_suite(one);
    ASSERT_EQ(single.checks.size(), 1u);
    const CheckRecord* same = find(full, "operators.corollary_chain");
    ASSERT_NE(same, nullptr);
    EXPECT_EQ(single.checks[0].max_residual, same->max_residual);
}

TEST(Verification, PropertySuitesHaveEnoughInstances)
{
    SuiteOptions opts;
    opts.select = std::vector<std::string>{"harmonic.harmonicity", "operators.dtn_boundary_recovery",
                                           "operators.rtn_boundary_recovery", "reflection.extension_independence",
                                           "reflection.fixed_points", "algebra.antiderivative_round_trip"};
    const VerificationReport r = run_verification_suite(opts);
    EXPECT_EQ(r.checks.size(), 6u);
    for (const auto& c : r.checks) {
        EXPECT_GE(c.instances, 50) << c.name;
    }
}

TEST(Verification, GoldenToleranceOverride)
{
    SuiteOptions opts;
    opts.select = std::vector<std::string>{"golden."};
    opts.fixture = load_fixture();
    opts.golden_tolerance = 1e-300;
    const VerificationReport r = run_verification_suite(opts);
    EXPECT_FALSE(r.checks.empty());
    int failed = 0;
    for (const auto& c : r.checks) {
        EXPECT_EQ(c.name.rfind("golden.", 0), 0u);
        failed += c.pass ? 0 : 1;
    }
    // Rows whose residual is exactly zero still pass.
    EXPECT_GT(failed, 5);
}

TEST(Verification, JsonReport)
{
    SuiteOptions opts;
    opts.select = std::vector<std::string>{"algebra.eval"};
    const Json j = to_json(run_verification_suite(opts));
    EXPECT_EQ(j.at("seed"), kDefaultSeed);
    EXPECT_EQ(j.at("failed"), 0);
    EXPECT_EQ(j.at("checks").size(), 1u);
    EXPECT_TRUE(j.at("checks")[0].contains("max_residual"));
}
