#include <gtest/gtest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wonder/catalog.hpp"
#include "wonder/cli.hpp"

using namespace wonder;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(WONDER_DATA_DIR) + "/" + name; }

std::string tmp(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("wonder_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

} // namespace

TEST(Cli, GroupThenEffective) {
    const auto path = tmp("b2.json");
    auto r = run({"group", "--type", "B2", "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(load(path), group_compactification("B2"));
    r = run({"effective", path, "1", "-1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("not effective"), std::string::npos);
    r = run({"effective", path, "2", "-2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("not effective"), std::string::npos);
    r = run({"sections", path, "1", "-1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("empty decomposition"), std::string::npos);
    r = run({"--json", "sections", path, "1", "-1"});
    const auto j = json_io::parse(r.out);
    EXPECT_TRUE(j["payload"]["summands"].empty());
}

TEST(Cli, OrbitsOfA1) {
    const auto r = run({"--json", "orbits", data("a1.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json_io::parse(r.out)["payload"]["count"], 3);
    EXPECT_NE(run({"orbits", data("a1.json")}).out.find("3 orbits"), std::string::npos);
}

TEST(Cli, FlagPositionDoesNotMatter) {
    EXPECT_EQ(run({"--json", "report", data("b2.json")}).out, run({"report", data("b2.json"), "--json"}).out);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"effective"}).code, 1);
    EXPECT_EQ(run({"effective", data("b2.json"), "1"}).code, 1);
    EXPECT_EQ(run({"effective", data("b2.json"), "1", "x"}).code, 1);
    EXPECT_EQ(run({"group", "--type", "Q7"}).code, 1);
    EXPECT_EQ(run({"tensorA", "3", "2", "1"}).code, 1);
    EXPECT_EQ(run({"relationsA", "3", "0", "1"}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, InvalidDatumExitsWithTwo) {
    EXPECT_EQ(run({"report", tmp("missing.json")}).code, 2);
    auto d = group_compactification("B2");
    d.colors[0].pairing = scale(2, d.colors[0].pairing);
    const auto bad = tmp("bad_b2.json");
    save(d, bad);
    auto r = run({"validate", bad});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("FAIL  weights_identity"), std::string::npos);
    EXPECT_EQ(run({"report", bad}).code, 2);
    EXPECT_EQ(run({"sections", bad, "1", "1"}).code, 2);
    const auto broken = tmp("broken.json");
    write(broken, "{\"name\": \"x\"}");
    r = run({"validate", broken});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("ambient"), std::string::npos);
    EXPECT_EQ(run({"autreport", data("sl3_incidence.json")}).code, 2);
    EXPECT_EQ(run({"validate", data("b2.json")}).code, 0);
}

TEST(Cli, MachineModeIsByteStable) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--json", "report", data("sl3_incidence.json")},
             {"--json", "orbits", data("b2.json")},
             {"--json", "classgroup", data("so8_standard.json")}}) {
        const auto a = run(args), b = run(args);
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.code, 0) << a.err;
    }
}

TEST(Cli, DigestTracksCanonicalDatum) {
    // reformatting the file does not change the digest
    const auto path = tmp("a1_compact.json");
    write(path, json_io::dump(to_json(group_compactification("A1")), -1));
    const auto a = json_io::parse(run({"--json", "report", path}).out);
    const auto b = json_io::parse(run({"--json", "report", data("a1.json")}).out);
    EXPECT_EQ(a["input_digest"], b["input_digest"]);
    EXPECT_EQ(a["input_digest"].get<std::string>().size(), 64u);
}

TEST(Cli, ReportIsFastOnSmallGroups) {
    for (const auto& t : builtin_group_types(4)) {
        const auto path = tmp("perf.json");
        save(group_compactification(t), path);
        const auto start = std::chrono::steady_clock::now();
        const auto r = run({"--json", "report", path});
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        EXPECT_EQ(r.code, 0) << t << r.err;
        EXPECT_LT(secs, 5.0) << t;
    }
}

// Golden files pin the machine-mode output. Regenerate with
// WONDER_UPDATE_GOLDEN=1 after an intended change.
struct GoldenCase {
    const char* name;
    std::vector<std::string> args;
};

void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.name; }

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesFile) {
    const auto& c = GetParam();
    std::vector<std::string> args{"--json"};
    for (const auto& a : c.args) args.push_back(a.rfind("data:", 0) == 0 ? data(a.substr(5)) : a);
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string path = std::string(WONDER_GOLDEN_DIR) + "/" + c.name + ".json";
    if (std::getenv("WONDER_UPDATE_GOLDEN")) write(path, r.out);
    EXPECT_EQ(r.out, slurp(path)) << c.name;
}

INSTANTIATE_TEST_SUITE_P(
    Cli, Golden,
    ::testing::Values(GoldenCase{"validate_b2", {"validate", "data:b2.json"}},
                      GoldenCase{"report_b2", {"report", "data:b2.json"}},
                      GoldenCase{"report_sl3_incidence", {"report", "data:sl3_incidence.json"}},
                      GoldenCase{"sections_a1_4", {"sections", "data:a1.json", "4"}},
                      GoldenCase{"effective_b2", {"effective", "data:b2.json", "1", "-1"}},
                      GoldenCase{"orbits_a1", {"orbits", "data:a1.json"}},
                      GoldenCase{"classgroup_so8", {"classgroup", "data:so8_standard.json"}},
                      GoldenCase{"classgroup_b2", {"classgroup", "data:b2.json"}},
                      GoldenCase{"tensorA_4_1_3", {"tensorA", "4", "1", "3"}},
                      GoldenCase{"relationsA_3_1_2", {"relationsA", "3", "1", "2"}},
                      GoldenCase{"autreport_a1xa1xa2", {"autreport", "data:a1xa1xa2.json"}}),
    [](const auto& info) { return std::string(info.param.name); });
