#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <string>

#include "golden_runner.hpp"
#include "test_support.hpp"
#include "hyperinv/cli.hpp"

using namespace hyperinv;
using namespace hyperinv::testing;

namespace {

const std::string kGoldenDir = HYPERINV_GOLDEN_DIR;

std::vector<GoldenCase> load_cases() { return hyperinv::testing::load_cases(kGoldenDir); }

std::string run_cli(const std::string& args) { return hyperinv::testing::run_cli(HYPERINV_CLI_PATH, kGoldenDir, args); }

CurveDocument doc(int genus, std::vector<Q> coeffs) { return CurveDocument{genus, std::move(coeffs)}; }

}  // namespace

TEST(CliGolden, MatchesExpectedOutput)
{
    const auto cases = load_cases();
    ASSERT_GT(cases.size(), 30u);
    const bool update = std::getenv("HYPERINV_UPDATE_GOLDENS") != nullptr;
    for (const auto& c : cases) {
        const std::string path = expected_path(kGoldenDir, c);
        const std::string got = run_cli(c.args);
        if (update) {
            std::ofstream(path, std::ios::binary) << got;
            continue;
        }
        EXPECT_EQ(got, read_file(path)) << "golden case " << c.name;
    }
}

TEST(CliGolden, ByteIdenticalAcrossRuns)
{
    for (const auto& c : load_cases()) EXPECT_EQ(run_cli(c.args), run_cli(c.args)) << "golden case " << c.name;
}

TEST(CliGolden, EveryExitCodeCovered)
{
    std::set<std::string> seen;
    for (const auto& c : load_cases()) {
        const std::string out = read_file(expected_path(kGoldenDir, c));
        const auto pos = out.rfind("exit: ");
        ASSERT_NE(pos, std::string::npos) << c.name;
        seen.insert(trim(out.substr(pos + 6, out.size() - pos - 7)));
    }
    for (const char* code : {"0", "2", "3", "4", "5"}) EXPECT_TRUE(seen.count(code)) << "exit code " << code;
}

TEST(CliCommands, ExitCodesDistinctPerClass)
{
    EXPECT_EQ(cli::exit_code_for(errc::parse_error), 2);
    EXPECT_EQ(cli::exit_code_for(errc::degenerate_curve), 3);
    EXPECT_EQ(cli::exit_code_for(errc::not_in_locus), 4);
    EXPECT_EQ(cli::exit_code_for(errc::precondition_failed), 5);
    EXPECT_EQ(cli::exit_code_for(errc::numeric_failure), 1);
}

TEST(CliCommands, InvariantsHappyPathAndErrors)
{
    auto ok = cli::cmd_invariants(doc(3, {1, 0, -7, 0, 14, 0, -7, 0, 1}));
    EXPECT_EQ(ok.exit_code, 0);
    EXPECT_EQ(ok.document["invariants"], (ordered_json{"4802", "1372", "98"}));

    EXPECT_EQ(cli::cmd_invariants(doc(3, {1, 0, -3, 0, 4, 0, -3, 0, 1})).exit_code, 3);
    auto not_in = cli::cmd_invariants(doc(3, {1, 1, 0, 0, 0, 0, 0, 0, 1}));
    EXPECT_EQ(not_in.exit_code, 4);
    EXPECT_EQ(not_in.document["error"], "not-in-L_g");
}

TEST(CliCommands, ModelRoundTrip)
{
    for (int trial = 0; trial < 20; ++trial) {
        const int g = trial % 2 == 0 ? 3 : 5;
        const auto lambdas = random_lambdas((g + 1) / 2);
        if (sum(lambdas).is_zero()) continue;
        const auto u = curve_invariants(HyperellipticCurve(g, quartic_product(lambdas)));
        auto model = cli::cmd_model({g, u.values(), ModelFamily::generic_v4, std::nullopt});
        if (model.exit_code == 3) continue;  // model polynomial happened to be singular
        ASSERT_EQ(model.exit_code, 0) << model.diagnostic;
        std::vector<Q> coeffs;
        for (const auto& c : model.document["coefficients"]) coeffs.push_back(Q::parse(c.get<std::string>()));
        auto back = cli::cmd_invariants(doc(g, coeffs));
        ASSERT_EQ(back.exit_code, 0);
        std::vector<Q> got;
        for (const auto& c : back.document["invariants"]) got.push_back(Q::parse(c.get<std::string>()));
        EXPECT_EQ(got, u.values());
    }
}

TEST(CliCommands, ModelExamples)
{
    auto aut16 = cli::cmd_model({std::nullopt, {}, ModelFamily::g3_aut16, Q(3)});
    EXPECT_EQ(aut16.document["coefficients"], (ordered_json{"1", "0", "0", "0", "3", "0", "0", "0", "3"}));
    EXPECT_EQ(cli::cmd_model({3, {82, 20, 6}, ModelFamily::generic_v4, std::nullopt}).exit_code, 5);
    EXPECT_EQ(cli::cmd_model({3, {162, 72, 18}, ModelFamily::generic_v4, std::nullopt}).exit_code, 3);
}

TEST(CliCommands, DecomposeReportsShift)
{
    auto r = cli::cmd_decompose(doc(1, {29, -44, 27, -8, 1}));
    EXPECT_EQ(r.document["H"], (ordered_json{"0", "-4", "1"}));
    EXPECT_EQ(r.document["shift"], "2");
    auto none = cli::cmd_decompose(doc(1, {1, 1, 0, 0, 1}));
    EXPECT_EQ(none.document["status"], "indecomposable");
    EXPECT_EQ(none.exit_code, 0);
}

TEST(Io, PolynomialText)
{
    EXPECT_EQ(parse_polynomial("x^8 - 3*x^6 + 1/2"), PQ({Q(1, 2), 0, 0, 0, 0, 0, -3, 0, 1}));
    EXPECT_EQ(parse_polynomial("-X + 2 X^2 - 7"), PQ({-7, -1, 2}));
    EXPECT_EQ(parse_polynomial("x^2 + x^2"), PQ({0, 0, 2}));
    EXPECT_THROW(parse_polynomial(""), error);
    EXPECT_THROW(parse_polynomial("x^"), error);
    EXPECT_THROW(parse_polynomial("3 4"), error);
    EXPECT_THROW(parse_polynomial("y^2"), error);
    const auto d = curve_document_from_text("x^6 + x^4 + x^2 + 1");
    EXPECT_EQ(d.genus, 2);
}

TEST(Io, JsonDocuments)
{
    const auto j = ordered_json::parse(R"({"genus": 2, "coeffs": ["1", "0", "-3/6", 0, "1", "0", "1"]})");
    const auto d = curve_document_from_json(j);
    EXPECT_EQ(d.coeffs[2], Q(-1, 2));
    EXPECT_EQ(to_json(d).dump(), R"({"genus":2,"coeffs":["1","0","-1/2","0","1","0","1"]})");
    EXPECT_THROW(curve_document_from_json(ordered_json::parse(R"({"genus": 2, "coeffs": ["1", "0"]})")), error);
    EXPECT_THROW(curve_document_from_json(ordered_json::parse(R"({"genus": 2, "coeffs": ["1", 0.5]})")), error);
    EXPECT_THROW(curve_document_from_json(ordered_json::parse(R"([1, 2])")), error);
    EXPECT_THROW(curve_document_from_json(ordered_json::parse(R"({"genus": 2, "coeffs": ["1","0","1","0","1","0","0"]})")),
                 error);
}
