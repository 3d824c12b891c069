#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "k3pts/cli.hpp"

using namespace k3pts;
using nlohmann::json;

namespace {

const std::string kData = K3PTS_DATA_DIR;

struct Result {
    int code;
    std::string out, err;
};

Result run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args) {
    auto r = run_cli(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out);
}

}  // namespace

TEST(Cli, FrobeniusAnchor) {
    auto j = run_json({"frobenius", "--curve", kData + "/family_1_56.json", "--prime", "11"});
    EXPECT_EQ(j["points_p"], 16);
    EXPECT_EQ(j["points_p2"], 158);
    EXPECT_EQ(j["t"], -4);
    EXPECT_EQ(j["charpoly"], json({121, 44, 26, 4, 1}));
    EXPECT_EQ(j["charpoly_minus_variant"], json({121, 44, -132, 4, 1}));
    EXPECT_EQ(j["jacobian_order"], 196);
}

TEST(Cli, PicardS6) {
    auto j = run_json({"picard", "invariants", "--group", "S6"});
    EXPECT_EQ(j["rank"], 2);
    EXPECT_EQ(j["total"], 720);
    EXPECT_EQ(j["picard_rank"], 3);
    EXPECT_EQ(j["rows"].size(), 11u);
    EXPECT_EQ(j["notes"].size(), 2u);
}

TEST(Cli, PicardGroupFromFile) {
    auto path = std::filesystem::temp_directory_path() / "k3pts_gens.json";
    std::ofstream(path) << R"j({"generators": ["(12)", "(12345)"]})j";
    auto j = run_json({"picard", "invariants", "--group", path.string()});
    EXPECT_EQ(j["order"], 120);
    EXPECT_EQ(j["rank"], 3);
    EXPECT_EQ(j["total"], 240);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli({"no-such-command"}).code, 2);
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"frobenius", "--prime", "11"}).code, 2);
    EXPECT_EQ(run_cli({"frobenius", "--curve", kData + "/family_1_56.json", "--prime", "9"}).code, 2);
    EXPECT_EQ(run_cli({"frobenius", "--curve", kData + "/family_1_56.json", "--prime", "7"}).code, 3);
    // L(1) = 2 + 2a - 4b vanishes for (a, b) = (1, 1)
    EXPECT_EQ(run_cli({"kummer", "point", "--a", "1", "--b", "1", "--x0", "1"}).code, 3);
    EXPECT_EQ(run_cli({"kummer", "point", "--a", "1", "--b", "1", "--x0", "2"}).code, 0);
    EXPECT_EQ(run_cli({"parity", "twists", "--split", "7", "--nonsplit", "7"}).code, 2);
    EXPECT_EQ(run_cli({"jacobian", "height", "--curve", kData + "/fermat_quintic.json", "--x0", "-1"}).code, 3);
    EXPECT_EQ(run_cli({"picard", "galois", "--poly", "1,0,1"}).code, 2);
    auto missing = run_cli({"frobenius", "--curve", "/nonexistent.json", "--prime", "11"});
    EXPECT_EQ(missing.code, 2);
    EXPECT_FALSE(missing.err.empty());
    EXPECT_TRUE(missing.out.empty());
}

TEST(Cli, EveryLeafHelpNamesAnAnchor) {
    std::vector<std::vector<std::string>> cmds = {
        {"frobenius"},         {"family"},           {"family", "gen"},       {"family", "validate"},
        {"kummer"},            {"kummer", "equation"}, {"kummer", "search"},  {"kummer", "point"},
        {"growth"},            {"growth", "fit"},    {"jacobian"},           {"jacobian", "qpoint"},
        {"jacobian", "height"}, {"jacobian", "lemma1"}, {"parity"},           {"parity", "twists"},
        {"parity", "certify"}, {"picard"},           {"picard", "invariants"}, {"picard", "fibration"},
        {"picard", "galois"},  {"reproduce-paper"}};
    for (auto c : cmds) {
        c.push_back("--help");
        auto r = run_cli(c);
        EXPECT_EQ(r.code, 0) << c[0];
        EXPECT_NE(r.out.find("Anchor:"), std::string::npos) << c[0] << " " << c[1];
    }
}

TEST(Cli, KummerEquationOrder) {
    auto j = run_json({"kummer", "equation", "--a", "3", "--b", "5"});
    EXPECT_EQ(j["coefficients"], json({1, -4, -20, 6, 2, -60, -20, 40, -20, -12}));
    EXPECT_EQ(j["order"][0], "k2^2*k4^2");
}

TEST(Cli, SearchIsThreadCountIndependent) {
    auto one = run_cli({"kummer", "search", "--a", "1", "--b", "56", "--height", "40", "--threads", "1"});
    auto three = run_cli({"kummer", "search", "--a", "1", "--b", "56", "--height", "40", "--threads", "3"});
    ASSERT_EQ(one.code, 0);
    EXPECT_EQ(one.out, three.out);
    auto csv = run_cli({"--format", "csv", "kummer", "search", "--a", "1", "--b", "56", "--height", "40"});
    EXPECT_EQ(csv.out.rfind("B,n\n", 0), 0u);
}

TEST(Cli, SearchTableFeedsGrowthFit) {
    auto path = (std::filesystem::temp_directory_path() / "k3pts_counts.csv").string();
    auto r = run_cli({"kummer", "search", "--a", "1", "--b", "56", "--height", "60", "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = run_json({"growth", "fit", path, "--model", "pow"});
    EXPECT_GE(j["rows_used"].get<int>(), 4);
    EXPECT_TRUE(j.contains("parameter"));
    EXPECT_TRUE(j.contains("r_squared"));
}

TEST(Cli, ExclusionFormsAreReported) {
    auto j = run_json({"kummer", "search", "--a", "1", "--b", "56", "--height", "60", "--exclude",
                       kData + "/exclude_conic.json"});
    for (const auto& p : j["excluded"]) {
        std::int64_t k1 = p[0], k2 = p[1], k3 = p[2];
        EXPECT_EQ(k2 * k2 - 4 * k1 * k3, 0);
    }
    EXPECT_FALSE(j["excluded"].empty());
}

TEST(Cli, ParityAndFamily) {
    auto t = run_json({"parity", "twists", "--split", "11", "--nonsplit", "3,5", "--count", "10"});
    ASSERT_EQ(t.size(), 10u);
    for (const auto& c : t)
        for (const auto& chk : c["checks"]) EXPECT_TRUE(chk["ok"].get<bool>());
    auto pos = run_json({"parity", "twists", "--split", "11", "--real", "split", "--count", "5"});
    for (const auto& c : pos) EXPECT_GT(c["d"].get<int>(), 0);
    auto cert = run_json({"parity", "certify", "--descriptor", kData + "/family_7_descriptor.json", "--d", "2"});
    EXPECT_EQ(cert["w_ratio"], -1);
    EXPECT_EQ(cert["conditional"], "Parity Conjecture");
    auto g = run_json({"family", "gen", "--p", "7", "--count", "3", "--bound", "10000"});
    EXPECT_EQ(g["members"][0], json({{"p_prime", 7}, {"a", 1}, {"b", 56}}));
    auto v = run_json({"family", "validate", "--p", "7", "--a", "1", "--b", "56"});
    EXPECT_TRUE(v["all_passed"].get<bool>());
    EXPECT_EQ(v["toric_rank"], 1);
}

TEST(Cli, FibrationAndGalois) {
    auto f = run_json({"picard", "fibration", "--gram", "4,-2,-10,-20"});
    EXPECT_FALSE(f["has_elliptic_fibration"].get<bool>());
    EXPECT_EQ(f["certificate"]["obstruction_place"], "5");
    auto h = run_json({"picard", "fibration", "--gram", "1,-1,3,7"});
    EXPECT_TRUE(h["has_elliptic_fibration"].get<bool>());
    auto g = run_json({"picard", "galois", "--poly", "56,0,1,0,0,0,1", "--primes", "50"});
    EXPECT_EQ(g["exact_match"], json({"6T11 2S4"}));
    auto q = run_json({"picard", "galois", "--curve", kData + "/fermat_quintic.json", "--primes", "20"});
    EXPECT_EQ(q["extra_root"], 0);
    EXPECT_EQ(q["sextic"], json({0, 1, 0, 0, 0, 0, 1}));
}

TEST(Cli, JacobianCommands) {
    auto q = run_json({"jacobian", "qpoint", "--curve", kData + "/fermat_quintic.json", "--x0", "2"});
    EXPECT_EQ(q["d"], 33);
    auto h = run_json({"jacobian", "height", "--curve", kData + "/fermat_quintic.json", "--x0", "2", "--depth", "5"});
    EXPECT_EQ(h["height_p"]["depth_used"], 5);
    auto l = run_json({"jacobian", "lemma1", "--curve", kData + "/fermat_quintic.json", "--x0", "1,3/2"});
    ASSERT_EQ(l.size(), 2u);
    for (const auto& r : l) {
        EXPECT_TRUE(r["sigma_antisymmetry"].get<bool>());
        EXPECT_TRUE(r["nontorsion"].get<bool>());
    }
}

TEST(Cli, ConfigFileAndFlags) {
    auto path = (std::filesystem::temp_directory_path() / "k3pts_cfg.json").string();
    std::ofstream(path) << R"({"doubling_depth": 3})";
    auto h = run_json({"--config", path, "jacobian", "height", "--curve", kData + "/fermat_quintic.json", "--x0", "2"});
    EXPECT_EQ(h["height_p"]["depth_used"], 3);
    auto flag = run_json(
        {"--config", path, "jacobian", "height", "--curve", kData + "/fermat_quintic.json", "--x0", "2", "--depth", "4"});
    EXPECT_EQ(flag["height_p"]["depth_used"], 4);
    std::ofstream(path) << R"({"doubling_depht": 3})";
    EXPECT_EQ(run_cli({"--config", path, "picard", "invariants", "--group", "S5"}).code, 2);
}
