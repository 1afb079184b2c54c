#include "fzeta/cli.hpp"
#include "fzeta/serialize.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fzeta;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> csv_lines(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) lines.push_back(line);
    return lines;
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

} // namespace

TEST(CliString, LatticeJson)
{
    const auto r = run({"string", "lattice", "--r", "1/3", "--m", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = length_sequence_from_json(Json::parse(r.out));
    ASSERT_TRUE(ls.rule().has_value());
    EXPECT_TRUE(ls.rule()->is_cantor());
    EXPECT_EQ(ls.entry(2).length, Rational(1, 9));
}

TEST(CliString, RealizeOmega1)
{
    const auto r = run({"string", "realize", "--variant", "omega1", "--depth", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(Json::parse(r.out)["intervals"].size(), 3u);
}

TEST(CliString, InvariantViolationIsOneLine)
{
    const auto r = run({"string", "lattice", "--r", "1/2", "--m", "2"});
    EXPECT_NE(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(r.err.rfind("error: ", 0), 0u);
    EXPECT_NE(r.err.find("m·r ≥ 1"), std::string::npos);
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(CliString, RejectsDecimalRatios)
{
    EXPECT_NE(run({"string", "lattice", "--r", "0.333"}).code, 0);
}

TEST(CliDims, PoleCountsAndOrder)
{
    auto r = run({"dims", "--r", "1/3", "--m", "2", "--im-max", "12"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto poles = Json::parse(r.out)["poles"];
    ASSERT_EQ(poles.size(), 5u);
    for (std::size_t i = 1; i < poles.size(); ++i) EXPECT_LT(poles[i - 1]["im"], poles[i]["im"]);
    r = run({"dims", "--r", "1/3", "--m", "2", "--im-max", "0.1"});
    EXPECT_EQ(Json::parse(r.out)["poles"].size(), 1u);
}

TEST(CliTube, SweepWithinTolerance)
{
    const auto r = run({"tube", "--r", "1/3", "--m", "2", "--grid", "50", "--n-terms", "500"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto lines = csv_lines(r.out);
    ASSERT_EQ(lines.size(), 51u);
    EXPECT_EQ(lines[0], "epsilon,v_direct,v_explicit,abs_diff,normalized");
    for (std::size_t i = 1; i < lines.size(); ++i) EXPECT_LE(std::stod(split(lines[i])[3]), 2e-3);
}

TEST(CliTube, SpotAndOutOfRange)
{
    auto r = run({"tube", "--epsilon", "1/18"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto lines = csv_lines(r.out);
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_NEAR(std::stod(split(lines[1])[1]), 7.0 / 9.0, 1e-16);

    r = run({"tube", "--epsilon", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    lines = csv_lines(r.out);
    EXPECT_EQ(split(lines[1])[2], "");
    EXPECT_NE(r.err.find("note:"), std::string::npos);
}

TEST(CliSpectrum, ArgmaxAndDegenerate)
{
    auto r = run({"spectrum", "--h", "3", "--w", "3", "--K", "24"});
    ASSERT_EQ(r.code, 0) << r.err;
    int maxima = 0;
    for (const auto& line : csv_lines(r.out)) {
        const auto cells = split(line);
        if (cells.back() == "true") {
            ++maxima;
            EXPECT_EQ(cells[0], "1");
            EXPECT_EQ(cells[1], "2");
        }
    }
    EXPECT_EQ(maxima, 1);

    r = run({"spectrum", "--h", "2", "--w", "3", "--K", "12"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto lines = csv_lines(r.out);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto c = split(lines[i]);
        EXPECT_NEAR(std::stod(c[3]), std::stod(c[4]), 1e-12);
    }

    r = run({"spectrum", "--h", "3", "--w", "2"});
    EXPECT_NE(r.code, 0);
    EXPECT_NE(r.err.find("degenerate: equal weights"), std::string::npos);
}

TEST(CliMzeta, VariantReports)
{
    auto r = run({"mzeta", "--variant", "omega2"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["zeta_neg_infty"], "(1/9)^s");
    EXPECT_TRUE(j["poles_neg_infty"].empty());

    r = run({"mzeta", "--variant", "omega3"});
    ASSERT_EQ(r.code, 0) << r.err;
    j = Json::parse(r.out);
    ASSERT_FALSE(j["poles_neg_infty"].empty());
    for (const auto& p : j["poles_neg_infty"]) EXPECT_NEAR(p["re"].get<double>(), 0.31546487678572871, 1e-12);

    r = run({"mzeta", "--variant", "omega1", "--verify-stages", "12"});
    ASSERT_EQ(r.code, 0) << r.err;
    j = Json::parse(r.out);
    EXPECT_LE(j["oracle"]["max_relative_error"].get<double>(), 1e-6);
}

TEST(CliMisc, CensusPzetaContentBoxZeta)
{
    auto r = run({"measure-census", "--h", "3", "--w", "3", "--n", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(csv_lines(r.out).size(), 4u);

    r = run({"pzeta", "--h", "3", "--w", "3", "--k1", "1", "--k2", "2", "--s", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(Json::parse(r.out)["value"]["re"].get<double>(), 0.3416407865, 1e-9);

    r = run({"content-bounds", "--r", "1/3", "--m", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_FALSE(Json::parse(r.out)["measurable"].get<bool>());

    r = run({"box-dim", "--variant", "omega1", "--depth", "8", "--k-min", "1", "--k-max", "8"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(Json::parse(r.out)["slope_estimate"].get<double>(), std::log(2.0) / std::log(3.0), 1e-12);

    r = run({"zeta", "--s-re", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(Json::parse(r.out)["closed_form"]["re"].get<double>(), 1.0 / 7.0, 1e-15);
}

TEST(CliErrors, UsageAndPoles)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    const auto r = run({"zeta", "--s-re", "0.63092975357145742"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.err.rfind("error: ", 0), 0u);
}

TEST(CliDeterminism, IdenticalOutputAcrossRuns)
{
    for (const auto& args : std::vector<std::vector<std::string>>{{"spectrum", "--h", "3", "--w", "3"},
                                                                   {"mzeta", "--variant", "omega3"},
                                                                   {"tube", "--grid", "20"}})
        EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliBinary, OutFlagWritesFile)
{
    const auto path = std::filesystem::temp_directory_path() / "fzeta_cli_test.json";
    std::filesystem::remove(path);
    const std::string cmd = std::string(FZETA_CLI_PATH) + " --out " + path.string() + " string lattice --depth 4";
    ASSERT_EQ(std::system(cmd.c_str()), 0);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(length_sequence_from_json(Json::parse(buf.str())).materialized(), 4u);
    std::filesystem::remove(path);
    const std::string bad = std::string(FZETA_CLI_PATH) + " string lattice --r 1/2 --m 2 2>/dev/null";
    EXPECT_NE(std::system(bad.c_str()), 0);
}
