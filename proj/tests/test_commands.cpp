#include "harmonia/commands.hpp"
#include "harmonia/error.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace harmonia;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fixture() { return read_file(HARMONIA_FIXTURE); }

int count(const std::string& text, const std::string& needle)
{
    int n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::Domain;
}

const char* kNeumannConstant = R"({
  "solution": {"symmetric": [{"re": 0.5, "k": 0, "m": 1}]},
  "data": [{"re": 1}],
  "point": {"r": 0.8, "theta": 0}
})";

} // namespace

TEST(CmdExamples, DefaultTable)
{
    const CommandResult r = cmd_examples(fixture(), {});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(count(r.output, " PASS "), 9);
    EXPECT_EQ(count(r.output, " DISCREPANCY "), 1);
    EXPECT_NE(r.output.find("9 passed, 1 discrepancy, 0 failed"), std::string::npos);
}

TEST(CmdExamples, TightToleranceKeepsExactRows)
{
    RunOptions opts;
    opts.tolerance = 1e-15;
    opts.format = OutputFormat::Json;
    const Json j = Json::parse(cmd_examples(fixture(), opts).output);
    for (const auto& row : j.at("examples")) {
        // Only the row with a quadrature shadow may fail at this tolerance.
        if (row.at("status") == "FAIL") {
            EXPECT_EQ(row.at("id"), "robin_reflect_cos");
            EXPECT_LE(row.at("max_residual").get<double>(), 1e-15);
        }
    }
}

TEST(CmdExamples, ImpossibleToleranceFails)
{
    RunOptions opts;
    opts.tolerance = -1.0;
    const CommandResult r = cmd_examples(fixture(), opts);
    EXPECT_EQ(r.exit_code, 1);
}

TEST(CmdExamples, JsonRecords)
{
    RunOptions opts;
    opts.format = OutputFormat::Json;
    const Json j = Json::parse(cmd_examples(fixture(), opts).output);
    EXPECT_EQ(j.at("examples").size(), 10u);
    EXPECT_EQ(j.at("passed"), 9);
    EXPECT_EQ(j.at("discrepancies"), 1);
    EXPECT_EQ(j.at("failed"), 0);
    for (const auto& row : j.at("examples")) {
        EXPECT_TRUE(row.contains("id"));
        EXPECT_TRUE(row.contains("max_residual"));
    }
}

TEST(CmdExamples, CsvHasOneLinePerRow)
{
    RunOptions opts;
    opts.format = OutputFormat::Csv;
    EXPECT_EQ(count(cmd_examples(fixture(), opts).output, "\n"), 11);
}

TEST(CmdExamples, MalformedFixture)
{
    EXPECT_EQ(code_of([] { cmd_examples("{", {}); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { cmd_examples(R"({"examples": [{"id": "x"}]})", {}); }), ErrorCode::Parse);
}

TEST(CmdVerify, DefaultPasses)
{
    const CommandResult r = cmd_verify(fixture(), std::nullopt, {});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(Json::parse(r.output).at("failed"), 0);
}

TEST(CmdVerify, CorruptedFixtureFails)
{
    const CommandResult r = cmd_verify(read_file(HARMONIA_TEST_DATA "/corrupted_examples.json"), std::nullopt, {});
    EXPECT_EQ(r.exit_code, 1);
}

TEST(CmdVerify, BadJsonIsParseError)
{
    EXPECT_EQ(code_of([] { cmd_verify(std::string("[1, 2"), std::nullopt, {}); }), ErrorCode::Parse);
}

TEST(CmdVerify, CsvFormat)
{
    RunOptions opts;
    opts.format = OutputFormat::Csv;
    const CommandResult r = cmd_verify(std::nullopt, std::vector<std::string>{"algebra."}, opts);
    EXPECT_EQ(r.output.rfind("name,tag,max_residual", 0), 0u);
    EXPECT_EQ(count(r.output, "\n"), 5);
}

TEST(Grid, ParseAndValidate)
{
    const Grid g = Grid::parse("0.5:1.5:3:-1:1:4");
    EXPECT_EQ(g.n_r, 3);
    EXPECT_EQ(g.n_theta, 4);
    EXPECT_EQ(code_of([] { Grid::parse("0.5:1.5:3"); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { Grid::parse("0.5:1.5:0:-1:1:4"); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { Grid::parse("1.5:0.5:3:-1:1:4"); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { Grid::parse("0:1:3:-1:1:4"); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { Grid::parse("a:1:3:-1:1:4"); }), ErrorCode::InvalidArgument);
}

TEST(CmdField, DtnOfLogMatchesDerivedForm)
{
    RunOptions opts;
    opts.format = OutputFormat::Json;
    const std::string input = R"({"solution": {"symmetric": [{"re": 0.5, "k": 0, "m": 1}]}})";
    const Json j = Json::parse(cmd_field(input, "dtn", Grid::parse("0.5:1.5:5:-2:2:5"), opts).output);
    ASSERT_EQ(j.at("rows").size(), 25u);
    double lo = INFINITY;
    double hi = -INFINITY;
    for (const auto& row : j.at("rows")) {
        const double r = row.at("r");
        const double t = row.at("theta");
        const double d = row.at("value").get<double>() - 0.5 * (std::log(r) * std::log(r) - t * t);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    EXPECT_LT(hi - lo, 1e-12);
}

TEST(CmdField, CutRowIsNullWithReason)
{
    const std::string input = R"({"solution": {"symmetric": [{"re": 0.5, "k": 0, "m": 1}]}})";
    Grid g;
    g.r_min = 0.5;
    g.r_max = 1.5;
    g.n_r = 2;
    g.theta_min = 0.0;
    g.theta_max = std::numbers::pi;
    g.n_theta = 2;
    const CommandResult r = cmd_field(input, "input", g, {});
    EXPECT_EQ(count(r.output, ",null,cut_proximity"), 2) << r.output;
    EXPECT_EQ(count(r.output, "\n"), 5);
}

TEST(CmdField, ReflectedFieldMatchesSolution)
{
    RunOptions opts;
    opts.format = OutputFormat::Json;
    const Json j = Json::parse(cmd_field(kNeumannConstant, "reflected", Grid::parse("1.1:1.8:3:-2:2:3"), opts).output);
    for (const auto& row : j.at("rows")) {
        EXPECT_NEAR(row.at("value").get<double>(), std::log(row.at("r").get<double>()), 1e-13);
    }
}

TEST(CmdField, Errors)
{
    EXPECT_EQ(code_of([] { cmd_field("{}", "input", Grid{}, {}); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { cmd_field(kNeumannConstant, "bogus", Grid{}, {}); }), ErrorCode::InvalidArgument);
    Grid bad;
    bad.n_r = 1;
    EXPECT_EQ(code_of([&] { cmd_field(kNeumannConstant, "input", bad, {}); }), ErrorCode::InvalidArgument);
}

TEST(CmdReflect, NeumannConstant)
{
    const CommandResult r = cmd_reflect(kNeumannConstant, "neumann", std::nullopt, false, {});
    const Json j = Json::parse(r.output);
    EXPECT_NEAR(j.at("correction").at("re").get<double>(), 0.4462871026284195, 1e-12);
    EXPECT_EQ(r.exit_code, 0);
}

TEST(CmdReflect, BoundaryPointHasZeroCorrection)
{
    const Json j = Json::parse(cmd_reflect(kNeumannConstant, "neumann", BiPoint::polar(1.0, 0.0), false, {}).output);
    EXPECT_EQ(j.at("correction").at("re").get<double>(), 0.0);
}

TEST(CmdReflect, CheckPassesOnGoldenInput)
{
    const CommandResult r = cmd_reflect(kNeumannConstant, "neumann", std::nullopt, true, {});
    const Json j = Json::parse(r.output);
    EXPECT_TRUE(j.at("check").at("pass").get<bool>());
    EXPECT_LT(j.at("check").at("residual").get<double>(), 1e-10);
    EXPECT_EQ(r.exit_code, 0);
}

TEST(CmdReflect, CheckFailsOnWrongData)
{
    const std::string input = R"({
      "solution": {"symmetric": [{"re": 0.5, "k": 0, "m": 1}]},
      "data": [{"re": 2}],
      "point": {"r": 0.8, "theta": 0}
    })";
    EXPECT_EQ(cmd_reflect(input, "neumann", std::nullopt, true, {}).exit_code, 1);
}

TEST(CmdReflect, FormulaFromInput)
{
    const std::string input = read_file(HARMONIA_TEST_DATA "/reflect_robin.json");
    const CommandResult r = cmd_reflect(input, "", std::nullopt, true, {});
    const Json j = Json::parse(r.output);
    EXPECT_EQ(j.at("formula"), "robin");
    EXPECT_EQ(r.exit_code, 0) << r.output;
}

TEST(CmdReflect, SchwarzOnRescaledCircle)
{
    const std::string input = read_file(HARMONIA_TEST_DATA "/reflect_schwarz.json");
    const CommandResult r = cmd_reflect(input, "schwarz", std::nullopt, true, {});
    EXPECT_EQ(r.exit_code, 0) << r.output;
}

TEST(CmdReflect, Errors)
{
    EXPECT_EQ(code_of([] { cmd_reflect(kNeumannConstant, "sideways", std::nullopt, false, {}); }),
              ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { cmd_reflect(kNeumannConstant, "robin", std::nullopt, false, {}); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { cmd_reflect(kNeumannConstant, "neumann", BiPoint{0.5, 0.7}, false, {}); }),
              ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { cmd_reflect(R"({"solution": 3})", "neumann", std::nullopt, false, {}); }),
              ErrorCode::Parse);
}
