#include "verlinde/cli.hpp"
#include "verlinde/localization.hpp"
#include "verlinde/serialize.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace verlinde;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args)
{
    args.push_back("--format");
    args.push_back("json");
    const CliRun r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return Json::parse(r.out);
}

double trig_verlinde(int h, int g)
{
    const int n = 2 * h + 4;
    double acc = 0;
    for (int j = 1; j <= h + 1; ++j) {
        const double s = std::sin(2 * M_PI * j / n);
        acc += std::pow(n / (4 * s * s), g - 1);
    }
    return acc;
}

} // namespace

TEST(Cli, ClassicalExamples)
{
    for (auto [h, g, v] : {std::tuple{1, 2, "4"}, {2, 2, "10"}, {3, 1, "4"}}) {
        const Json j = run_json({"classical", "--h", std::to_string(h), "--g", std::to_string(g)});
        EXPECT_EQ(j["jobs"][0]["value"]["exact"], v);
        EXPECT_NEAR(std::stod(j["jobs"][0]["value"]["decimal"].get<std::string>()), trig_verlinde(h, g), 1e-9);
    }
    const CliRun text = run({"classical", "--h", "1", "--g", "2"});
    EXPECT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("value = 4"), std::string::npos);
}

TEST(Cli, GridExpansionIsOrdered)
{
    const Json j = run_json({"classical", "--grid", "h=0..2,g=1..2"});
    ASSERT_EQ(j["jobs"].size(), 6u);
    EXPECT_EQ(j["jobs"][0]["inputs"]["h"], 0);
    EXPECT_EQ(j["jobs"][1]["inputs"]["g"], 2);
    EXPECT_EQ(j["jobs"][5]["inputs"]["h"], 2);
    for (const auto& job : j["jobs"])
        if (job["inputs"]["g"] == 1)
            EXPECT_EQ(job["value"]["exact"], std::to_string(job["inputs"]["h"].get<int>() + 1));
}

TEST(Cli, DeformedConsistency)
{
    for (int h = 0; h <= 3; ++h) {
        const std::string hs = std::to_string(h);
        const Json cl = run_json({"classical", "--h", hs, "--g", "2"});
        const Json df = run_json({"deformed", "--h", hs, "--g", "2", "--rep", "su2:2", "--order", "3"});
        EXPECT_EQ(df["jobs"][0]["series"]["exact"][0], cl["jobs"][0]["value"]["exact"]);
        for (const auto& row : df["jobs"][0]["integrality"])
            EXPECT_TRUE(row["integral"].get<bool>());

        const Json g1 = run_json({"deformed", "--h", hs, "--g", "1", "--rep", "su2:3", "--order", "4"});
        const RatSeries s1 = rat_series_from_json(g1["jobs"][0]["series"]);
        EXPECT_EQ(s1, RatSeries::constant(h + 1, 4));

        const Json triv = run_json({"deformed", "--h", hs, "--g", "3", "--rep", "su2:0", "--order", "3"});
        const RatSeries st = rat_series_from_json(triv["jobs"][0]["series"]);
        for (int k = 1; k <= 3; ++k)
            EXPECT_EQ(st[k], 0);
    }
}

TEST(Cli, SymmetricMorphismFlag)
{
    const Json a = run_json({"deformed", "--h", "1", "--g", "2", "--rep", "su2:1", "--order", "3"});
    const Json b = run_json({"deformed", "--h", "1", "--g", "2", "--rep", "su2:1", "--order", "3", "--morphism", "symmetric"});
    EXPECT_EQ(b["jobs"][0]["inputs"]["morphism"], "symmetric");
    EXPECT_EQ(a["jobs"][0]["series"]["exact"][1], b["jobs"][0]["series"]["exact"][1]);
}

TEST(Cli, CompareRoutes)
{
    const CliRun eq = run({"compare", "--grid", "h=1..2,g=0..2", "--rep", "su2:1", "--eval", "su2:1", "--order", "3"});
    EXPECT_EQ(eq.code, kExitOk) << eq.err;
    size_t hits = 0;
    for (size_t pos = 0; (pos = eq.out.find("EQUAL through t^3", pos)) != std::string::npos; ++pos)
        ++hits;
    EXPECT_EQ(hits, 6u);

    const Json j = run_json({"compare", "--h", "2", "--g", "2", "--rep", "su2:2", "--order", "2"});
    const Json& job = j["jobs"][0];
    EXPECT_TRUE(job["equal"].get<bool>());
    EXPECT_TRUE(job["first_mismatch"].is_null());
    // N - 2 support roots; their contributions add up to the index.
    ASSERT_EQ(job["support"].size(), 6u);
    CycSeries total = CycSeries::constant(0, 2);
    for (const auto& s : job["support"])
        total += cyc_series_from_json(s["contribution"]);
    EXPECT_EQ(rational_series(total), rat_series_from_json(job["route_b"]));

    const CliRun k0 = run({"compare", "--h", "1", "--g", "3", "--order", "0"});
    EXPECT_EQ(k0.code, kExitOk);
    EXPECT_NE(k0.out.find("EQUAL through t^0"), std::string::npos);
}

TEST(Cli, DisabledExclusionReportsMismatch)
{
    const CliRun g2 = run({"compare", "--h", "1", "--g", "2", "--rep", "su2:1", "--order", "2", "--no-exclusion"});
    EXPECT_EQ(g2.code, kExitMismatch);
    EXPECT_NE(g2.err.find("first differing coefficient"), std::string::npos);
    const CliRun g1 = run({"compare", "--h", "1", "--g", "1", "--rep", "su2:2", "--order", "2", "--no-exclusion"});
    EXPECT_EQ(g1.code, kExitMismatch);
    EXPECT_NE(g1.out.find("MISMATCH at t^0"), std::string::npos);
}

TEST(Cli, DumpEuler)
{
    // (-1)^0 (..)^0 (u e^eta)^0 e^{-4 eta} = 1 - 4 a1 b1 at genus one.
    const Json j = run_json({"dump", "euler", "--g", "1", "--d", "0"});
    const Json& m = j["jobs"][0]["monomials"];
    ASSERT_EQ(m.size(), 2u);
    EXPECT_EQ(m[0], "1 | u^0 u^(0d) d^0 t^0 | 1");
    EXPECT_EQ(m[1], "a1*b1 | u^0 u^(0d) d^0 t^0 | -4");
    EXPECT_EQ(j["jobs"][0]["weyl_power"], 0);

    const CliRun missing = run({"dump", "euler"});
    EXPECT_EQ(missing.code, kExitUsage);
}

TEST(Cli, DumpIntegrand)
{
    // Genus zero: -(u - u^-1)^2 D^0, nothing else.
    const Json j = run_json({"dump", "integrand", "--h", "0", "--g", "0"});
    const Json& job = j["jobs"][0];
    EXPECT_EQ(job["modulus"], 4);
    EXPECT_EQ(job["euler_sign"], -1);
    EXPECT_EQ(job["weyl_power"], -2);
    ASSERT_EQ(job["core"].size(), 1u);
    EXPECT_EQ(job["core"][0], "{0:1}");
    EXPECT_TRUE(job["flows"].empty());
}

TEST(Cli, DumpFrobeniusRoundTrip)
{
    const Json j = run_json({"dump", "frobenius", "--h", "1", "--rep", "su2:1", "--K", "2"});
    const Json& rec = j["jobs"][0];
    ASSERT_EQ(rec["points"].size(), 2u);
    const auto back = frobenius_from_json(rec);
    const auto direct = deform_points<CycSeries>(LevelData(1), {su2_character(SU2Rep{1})}, Morphism::naive, {2});
    ASSERT_EQ(back.points.size(), direct.points.size());
    for (size_t k = 0; k < back.points.size(); ++k) {
        EXPECT_EQ(back.points[k].j, direct.points[k].j);
        EXPECT_EQ(back.points[k].point.base(), direct.points[k].point.base());
        EXPECT_EQ(back.points[k].point.correction(), direct.points[k].point.correction());
        EXPECT_EQ(back.points[k].theta, direct.points[k].theta);
    }
    EXPECT_EQ(rational_series(partition_function(back, 2)), rational_series(partition_function(direct, 2)));
    EXPECT_EQ(to_json(back, 20), rec);

    Json broken = rec;
    broken["points"][0]["epsilon"]["exact"][1] = "0";
    EXPECT_THROW(frobenius_from_json(broken), ConsistencyError);
}

TEST(Cli, ScalarJsonRoundTrip)
{
    const CycScalar x = CycScalar::root_of_unity(10, 3) * CycScalar(make_rational(-7, 3)) + CycScalar(2);
    EXPECT_EQ(cyc_from_json(to_json(x, 10)), x);
    const CycSeries s({CycScalar(1), CycScalar::root_of_unity(6, 1), CycScalar::root_of_unity(4, 1)});
    EXPECT_EQ(cyc_series_from_json(to_json(s, 10)), s);
    const RatSeries r({Rational(1), make_rational(-5, 7), Rational(0)});
    EXPECT_EQ(rat_series_from_json(to_json(r, 10)), r);
    EXPECT_EQ(rational_from_json(to_json(make_rational(22, 7), 5)), make_rational(22, 7));
    EXPECT_THROW(cyc_series_from_json(Json{{"exact", Json::array()}, {"conductor", 4}}), PreconditionError);
}

TEST(Cli, OutputIsDeterministic)
{
    const std::vector<std::string> args{"compare", "--grid", "h=1..2,g=1..2", "--rep", "su2:1", "--order", "2", "--format", "json"};
    const CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.find("time"), std::string::npos);
}

TEST(Cli, CsvIsDecimalOnly)
{
    const CliRun r = run({"deformed", "--h", "2", "--g", "2", "--rep", "su2:2", "--order", "3", "--format", "csv", "--digits", "8"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "h,g,n,coefficient,scaled");
    EXPECT_EQ(r.out.find('/'), std::string::npos);
    EXPECT_NE(r.out.find("2,2,3,10.66666667,64.00000000"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"dump", "bogus", "--h", "1"}).code, kExitUsage);
    EXPECT_EQ(run({"classical", "--g", "2"}).code, kExitUsage);
    EXPECT_EQ(run({"classical", "--h", "1", "--g", "2", "--format", "xml"}).code, kExitUsage);
    EXPECT_EQ(run({"deformed", "--h", "1", "--g", "2", "--rep", "su2:x"}).code, kExitUsage);
    EXPECT_EQ(run({"deformed", "--h", "1", "--g", "2", "--morphism", "odd"}).code, kExitUsage);
    EXPECT_EQ(run({"classical", "--grid", "h=3..1,g=0"}).code, kExitUsage);
    EXPECT_EQ(run({"compare", "--h", "1", "--g", "2", "--morphism", "symmetric"}).code, kExitUsage);
    EXPECT_EQ(run({"classical", "--help"}).code, kExitOk);
    // A character that is not Weyl-invariant leaves the rationals.
    EXPECT_EQ(run({"classical", "--h", "1", "--g", "2", "--eval", "laurent:{1:1}"}).code, kExitComputation);
}
