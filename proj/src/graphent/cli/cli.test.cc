#include "graphent/cli/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

using namespace graphent;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;

    json parsed() const { return json::parse(out); }
};

CliRun run(std::vector<std::string> args, const std::string &input = "") {
    args.insert(args.begin(), "graphent");
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string &name) { return std::string(GRAPHENT_TEST_DATA) + "/" + name; }

}  // namespace

TEST(cli_analyze, double_star) {
    CliRun r = run({"analyze", data("double_star.txt")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    json j = r.parsed();
    EXPECT_EQ(j["measures"]["schmidt"], 2);
    EXPECT_EQ(j["measures"]["ree"], 2);
    EXPECT_EQ(j["measures"]["geometric"], 2);
    EXPECT_EQ(j["decomposition"].size(), 4u);
}

TEST(cli_analyze, star5_and_inline) {
    CliRun r = run({"analyze", data("star5.txt")});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.parsed()["measures"]["schmidt"], 1);
    CliRun inline_run = run({"analyze", "--edges", "1-2,1-3,1-4,1-5"});
    EXPECT_EQ(inline_run.out, r.out);
    CliRun g6 = run({"analyze", "--graph6", "D?{"});
    ASSERT_EQ(g6.code, kExitOk) << g6.err;
    EXPECT_EQ(g6.parsed()["measures"]["schmidt"], 1);
}

TEST(cli_analyze, stdin_and_out_file) {
    std::ifstream f(data("p3.txt"));
    std::string text((std::istreambuf_iterator<char>(f)), {});
    CliRun r = run({"analyze", "-"}, text);
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.parsed()["cps"], "+0+");

    std::string path = (std::filesystem::temp_directory_path() / "graphent_cli_test.json").string();
    CliRun to_file = run({"analyze", data("p3.txt"), "--out", path});
    ASSERT_EQ(to_file.code, kExitOk);
    EXPECT_TRUE(to_file.out.empty());
    std::ifstream written(path);
    EXPECT_EQ(json::parse(written), r.parsed());
    std::filesystem::remove(path);
}

TEST(cli_analyze, oracle_section) {
    CliRun r = run({"analyze", data("double_star.txt"), "--oracle", "--seed", "3"});
    ASSERT_EQ(r.code, kExitOk);
    json o = r.parsed()["oracle"];
    EXPECT_NEAR(o["ree_of_css"].get<double>(), 2.0, 1e-9);
    EXPECT_NEAR(o["cps_overlap"].get<double>(), 0.25, 1e-12);
    EXPECT_LT(o["reconstruction_error"].get<double>(), 1e-12);
    EXPECT_LE(o["best_product_overlap_search"].get<double>(), 0.25 + 1e-9);
    EXPECT_EQ(run({"analyze", data("double_star.txt"), "--oracle", "--seed", "3"}).out, r.out);
}

TEST(cli_analyze, bounds_that_do_not_coincide) {
    // Seven-ring with a chord: |beta| = 4 and cut rank 3 across its orbit.
    CliRun chord = run({"analyze", "--edges", "1-2,2-3,3-4,4-5,5-6,6-7,7-1,1-4"});
    EXPECT_EQ(chord.code, kExitBoundsDiffer);
    EXPECT_EQ(chord.parsed()["measures"]["ree"], json::array({3, 4}));
    CliRun capped = run({"analyze", "--edges", "1-2,2-3,3-4,4-5,5-6,6-7,7-1,1-4", "--orbit-cap", "1"});
    EXPECT_EQ(capped.code, kExitBoundsDiffer);
    json j = capped.parsed();
    EXPECT_EQ(j["bounds"]["truncated"], true);
    EXPECT_EQ(j["certified"], false);
    EXPECT_TRUE(j.contains("note"));
    // The five-cycle has M = 2 and |beta| = 3 on every member of its orbit.
    CliRun c5 = run({"analyze", "--edges", "1-2,2-3,3-4,4-5,5-1"});
    EXPECT_EQ(c5.code, kExitBoundsDiffer);
    EXPECT_EQ(c5.parsed()["measures"]["schmidt"], json::array({2, 3}));
}

TEST(cli_analyze, input_errors) {
    CliRun bad = run({"analyze", data("malformed.txt")});
    EXPECT_EQ(bad.code, kExitInputError);
    EXPECT_NE(bad.err.find("error"), std::string::npos);
    EXPECT_EQ(run({"analyze", data("disconnected.txt")}).code, kExitInputError);
    EXPECT_EQ(run({"analyze", data("missing.txt")}).code, kExitInputError);
    EXPECT_EQ(run({"analyze"}).code, kExitInputError);
    EXPECT_EQ(run({"analyze", data("p2.txt"), "--edges", "1-2"}).code, kExitInputError);
    EXPECT_EQ(run({"analyze", "--edges", "1-1"}).code, kExitInputError);
    EXPECT_EQ(run({"analyze", "--edges", "1,2"}).code, kExitInputError);
    EXPECT_EQ(run({"analyze", data("p2.txt"), "--format", "dot"}).code, kExitInputError);
    EXPECT_EQ(run({"bogus"}).code, kExitInputError);
    EXPECT_EQ(run({}).code, kExitInputError);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(cli_css, methods) {
    CliRun all = run({"css", data("p3.txt"), "--method", "all"});
    ASSERT_EQ(all.code, kExitOk) << all.err;
    json j = all.parsed();
    EXPECT_EQ(j["verdict"], "equal");
    ASSERT_EQ(j["css"].size(), 3u);
    EXPECT_EQ(j["css"][0]["method"], "stabilizer");
    EXPECT_EQ(j["css"][1]["method"], "peps");
    EXPECT_EQ(j["css"][2]["method"], "noise");

    CliRun peps = run({"css", data("p2.txt"), "--method", "peps"});
    ASSERT_EQ(peps.code, kExitOk);
    EXPECT_EQ(peps.parsed()["css"]["components"], json::array({"+0", "-1"}));
    EXPECT_EQ(peps.parsed()["css"]["weight"], 0.5);

    CliRun noise = run({"css", data("double_star.txt"), "--method", "noise"});
    ASSERT_EQ(noise.code, kExitOk);
    EXPECT_EQ(noise.parsed()["css"]["components"], json::array({"++++00", "--++01", "++--10", "----11"}));

    EXPECT_EQ(run({"css", data("p2.txt"), "--method", "magic"}).code, kExitInputError);
    EXPECT_EQ(run({"css", data("ring6_chord.txt"), "--method", "all"}).code, kExitOk);
}

TEST(cli_orbit, summaries) {
    CliRun star = run({"orbit", data("star4.txt"), "--members"});
    ASSERT_EQ(star.code, kExitOk);
    json j = star.parsed();
    EXPECT_EQ(j["min_matching"], 1);
    EXPECT_EQ(j["min_vertex_cover"], 1);
    json k4 = json::array({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    bool found = false;
    for (const auto &m : j["members"]) {
        found = found || m == k4;
    }
    EXPECT_TRUE(found);

    EXPECT_EQ(run({"orbit", data("p2.txt")}).parsed()["size"], 1);
    json ds = run({"orbit", data("double_star.txt")}).parsed();
    EXPECT_EQ(ds["min_matching"], 2);
    EXPECT_EQ(ds["min_vertex_cover"], 2);
}

TEST(cli_lattice, tables) {
    CliRun hex = run({"lattice", "hexagonal", "1..4", "--exact"});
    ASSERT_EQ(hex.code, kExitOk) << hex.err;
    std::istringstream lines(hex.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "kind,size,N,matching,vertex_cover,gap_exact,gap_formula,difference,note");
    int rows = 0;
    while (std::getline(lines, line)) {
        EXPECT_NE(line.find(",0,0,0,"), std::string::npos) << line;
        rows++;
    }
    EXPECT_EQ(rows, 4);

    CliRun tri = run({"lattice", "triangular", "4..6", "--exact"});
    ASSERT_EQ(tri.code, kExitOk);
    EXPECT_NE(tri.out.find("triangular,4,16,8,10,2,2,0,"), std::string::npos) << tri.out;
    EXPECT_NE(tri.out.find("triangular,6,36,18,24,6,"), std::string::npos) << tri.out;

    CliRun small = run({"lattice", "triangular", "3"});
    EXPECT_EQ(small.code, kExitInputError);
    EXPECT_NE(small.err.find("L > 3"), std::string::npos);

    EXPECT_EQ(run({"lattice", "square", "3"}).code, kExitInputError);
    EXPECT_EQ(run({"lattice", "kagome", "3..1"}).code, kExitInputError);
    CliRun formula = run({"lattice", "kagome", "1,20"});
    ASSERT_EQ(formula.code, kExitOk);
    EXPECT_NE(formula.out.find("kagome,20,1259,,,,"), std::string::npos) << formula.out;
}

TEST(cli_verify, passes_on_examples) {
    for (const char *name : {"double_star.txt", "p3.txt", "ring6_chord.txt", "star4.txt"}) {
        CliRun r = run({"verify", data(name)});
        ASSERT_EQ(r.code, kExitOk) << name << r.err << r.out;
        EXPECT_EQ(r.parsed()["all_pass"], true);
    }
    CliRun ring = run({"verify", data("ring6.txt")});
    ASSERT_EQ(ring.code, kExitOk);
    json j = ring.parsed();
    EXPECT_EQ(j["value"], 3);
    EXPECT_EQ(j["maximally_entangled"], true);
    EXPECT_EQ(j["checks"].size(), 8u);
    EXPECT_EQ(run({"verify", "--edges", "1-2,2-3,3-4,4-5,5-6,6-7,7-8,8-9,9-10,10-11"}).code, kExitInputError);
}
