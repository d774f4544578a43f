#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "icstalk/cli.hpp"
#include "icstalk/json_io.hpp"
#include "test_support.hpp"

using namespace icstalk;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(ICSTALK_SAMPLES_DIR) + "/" + name; }

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("icstalk_test_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name, const std::string& contents = "") const {
    const auto p = path_ / name;
    if (!contents.empty()) std::ofstream(p) << contents;
    return p.string();
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(JsonIo, RationalEncoding) {
  EXPECT_EQ(rational_to_json(Rational(7)), Json(7));
  EXPECT_EQ(rational_to_json(Rational(-7, 2)), Json("-7/2"));
  EXPECT_EQ(rational_to_json(Rational::parse("100000000000000000000")), Json("100000000000000000000"));
  EXPECT_EQ(rational_from_json(Json("4/6")), Rational(2, 3));
  EXPECT_EQ(rational_from_json(Json(-3)), Rational(-3));
  EXPECT_THROW(rational_from_json(Json(0.5)), InputError);
  EXPECT_THROW(rational_from_json(Json(true)), InputError);
}

TEST(JsonIo, MonodromySchemaErrors) {
  const auto good = parse_json(R"({"dim": 2, "pairing": [[0,1],[-1,0]], "cycles": [[1,0]], "h_ambient": 1})");
  EXPECT_NO_THROW(monodromy_from_json(good));
  for (const char* bad :
       {R"({"pairing": [[0,1],[-1,0]], "cycles": [], "h_ambient": 1})",
        R"({"dim": 2, "pairing": [[0,1],[-1]], "cycles": [], "h_ambient": 1})",
        R"({"dim": 2, "pairing": [[0,1],[-1,0]], "cycles": [[1,0,0]], "h_ambient": 1})",
        R"({"dim": 2, "pairing": [[0,1],[-1,0]], "cycles": [], "h_ambient": -1})",
        R"({"dim": 2, "pairing": [[0,1],[-1,0]], "cycles": [], "h_ambient": 1, "fiber_dim": 4})",
        R"({"dim": "2", "pairing": [[0,1],[-1,0]], "cycles": [], "h_ambient": 1})",
        R"({"dim": 2, "pairing": [[0,1.5],[-1,0]], "cycles": [], "h_ambient": 1})"})
    EXPECT_THROW(monodromy_from_json(parse_json(bad)), InputError) << bad;
  EXPECT_THROW(parse_json("{not json"), InputError);
}

TEST(JsonIo, ReportsRoundTrip) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = icstalk::testing::random_nodal_data(rng, 8, 4);
    EXPECT_EQ(monodromy_from_json(parse_json(to_json(d).dump())), d);
    const auto r = ic_stalk(d);
    EXPECT_EQ(ic_report_from_json(parse_json(to_json(r).dump())), r);
  }
  for (std::int64_t k = 2; k <= 5; ++k) {
    const auto g = grid_nodes(2, k);
    EXPECT_EQ(point_set_from_json(parse_json(to_json(g).dump())), g);
    const auto c = conditions_report(g, k);
    EXPECT_EQ(conditions_from_json(parse_json(to_json(c).dump())), c);
    const auto nc = normal_crossing_check(g);
    EXPECT_EQ(normal_crossing_from_json(parse_json(to_json(nc).dump())), nc);
    const auto res = koszul_resolution(2, {k - 1, k});
    EXPECT_EQ(resolution_from_json(parse_json(to_json(res).dump())), res);
    const auto v = h1_vanishing_chase(res, k + 1);
    EXPECT_EQ(chase_from_json(parse_json(to_json(v).dump())), v);
  }
  const auto rep = paper_examples({3, 5, 3, 100});
  EXPECT_EQ(paper_examples_from_json(parse_json(to_json(rep).dump())), rep);
}

TEST(Cli, IcStalkJsonReport) {
  const auto r = run_cli({"ic-stalk", "--input", sample("defective_pair.json"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse_json(r.out);
  EXPECT_EQ(j["h0"], 3);
  EXPECT_EQ(j["h1"], 1);
  EXPECT_EQ(j["defect"], 1);
  EXPECT_EQ(j["h_top_singular"], 2);
  EXPECT_EQ(j["filtration"]["level0"], 1);
  EXPECT_EQ(ic_report_from_json(j).h1, 1);
}

TEST(Cli, IcStalkTableAndSign) {
  const auto minus = run_cli({"ic-stalk", "--input", sample("two_nodes.json"), "--json"});
  const auto plus = run_cli({"ic-stalk", "--input", sample("two_nodes.json"), "--json", "--sign", "1"});
  ASSERT_EQ(minus.code, 0) << minus.err;
  EXPECT_EQ(minus.out, plus.out);
  EXPECT_EQ(parse_json(minus.out)["h0"], 2);

  const auto table = run_cli({"ic-stalk", "--input", sample("two_nodes.json")});
  ASSERT_EQ(table.code, 0);
  EXPECT_NE(table.out.find("perverse filtration"), std::string::npos);
  EXPECT_EQ(run_cli({"ic-stalk", "--input", sample("two_nodes.json"), "--sign", "3"}).code, 1);
}

TEST(Cli, KoszulVanishes) {
  const auto r = run_cli({"koszul", "--n", "2", "--degrees", "3,3", "--twist", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("vanishes: true"), std::string::npos) << r.out;

  const auto j = parse_json(run_cli({"koszul", "--n", "2", "--degrees", "4,4", "--twist", "5", "--json"}).out);
  EXPECT_EQ(j["verdict"]["vanishes"], false);
  EXPECT_EQ(j["verdict"]["exact_h1"], 1);
}

TEST(Cli, PointsOnGrid) {
  TempDir tmp;
  const auto grid_file = tmp.file("grid25.json");
  const auto g = run_cli({"grid", "--n", "2", "--k", "5", "--out", grid_file});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_TRUE(g.out.empty());
  const auto r = run_cli({"points", "--input", grid_file, "--degree", "5", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse_json(r.out);
  EXPECT_EQ(j["conditions"]["h1_ideal"], 1);
  EXPECT_EQ(j["conditions"]["rank"], 15);
  EXPECT_EQ(j["span_dim"], 2);

  const auto table = run_cli({"points", "--input", sample("collinear.json"), "--degree", "1"});
  ASSERT_EQ(table.code, 0);
  EXPECT_NE(table.out.find("independent"), std::string::npos);
}

TEST(Cli, ChaseAndEagonNorthcott) {
  auto r = run_cli({"chase", "--input", sample("koszul_p2_k5.json"), "--twist", "5", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_json(r.out)["exact_h1"], 1);

  r = run_cli({"eagon-northcott", "--n", "3", "--quadrics", "2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = parse_json(r.out);
  EXPECT_EQ(j["verdict"]["vanishes"], true);
  EXPECT_EQ(j["node_count"], 10);

  r = run_cli({"eagon-northcott", "--n", "3", "--quadrics", "3", "--json"});
  j = parse_json(r.out);
  EXPECT_EQ(j["verdict"]["vanishes"], false);
  EXPECT_EQ(j["verdict"]["obstructions"][0]["twist"], -4);
}

TEST(Cli, PaperExamples) {
  const auto r = run_cli({"paper-examples", "--max-n", "4", "--max-k", "6", "--max-h", "4",
                          "--grid-cap", "100", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse_json(r.out);
  EXPECT_EQ(j["reproduced"], true);
  EXPECT_TRUE(j["deviations"].empty());
  bool has_sample = false;
  for (const auto& s : j["severi_samples"])
    if (s["N"] == 9 && s["delta"] == 4) has_sample = s["expected_dim"] == 5;
  EXPECT_TRUE(has_sample);
  for (const auto& c : j["en_table"]) {
    if (c["h"] == 1) {
      EXPECT_EQ(c["node_count"], c["n"].get<int>() + 1);
    }
    if (c["h"] == 3) {
      EXPECT_EQ(c["chase_vanishes"], false);
      EXPECT_GT(c["upper_bound"].get<int>(), 0);
    }
  }
}

TEST(Cli, ExitCodes) {
  TempDir tmp;
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
  EXPECT_EQ(run_cli({"points", "--input", sample("collinear.json")}).code, 1);  // missing --degree
  EXPECT_EQ(run_cli({"ic-stalk", "--input", tmp.file("missing.json")}).code, 1);
  EXPECT_EQ(run_cli({"ic-stalk", "--input", tmp.file("broken.json", "{\"dim\": ")}).code, 1);
  EXPECT_EQ(run_cli({"koszul", "--n", "1", "--degrees", "2,2", "--twist", "0"}).code, 1);
  EXPECT_EQ(run_cli({"--help"}).code, 0);

  const auto zero = run_cli({"ic-stalk", "--input",
                             tmp.file("zero.json", R"({"dim": 2, "pairing": [[0,1],[-1,0]],
                                                       "cycles": [[0,0]], "h_ambient": 0})")});
  EXPECT_EQ(zero.code, 2);
  EXPECT_NE(zero.err.find("zero vanishing cycle unsupported"), std::string::npos);

  const auto skew = run_cli({"ic-stalk", "--input",
                             tmp.file("sym.json", R"({"dim": 2, "pairing": [[0,1],[1,0]],
                                                      "cycles": [[1,0]], "h_ambient": 0})")});
  EXPECT_EQ(skew.code, 2);
  EXPECT_NE(skew.err.find("pairing not skew"), std::string::npos);
}

TEST(Cli, NoFilesWithoutOut) {
  TempDir tmp;
  const auto before = std::distance(std::filesystem::directory_iterator(tmp.path()),
                                    std::filesystem::directory_iterator{});
  const auto cwd = std::filesystem::current_path();
  std::filesystem::current_path(tmp.path());
  run_cli({"grid", "--n", "2", "--k", "3"});
  run_cli({"koszul", "--n", "2", "--degrees", "1,1", "--twist", "1", "--json"});
  std::filesystem::current_path(cwd);
  const auto after = std::distance(std::filesystem::directory_iterator(tmp.path()),
                                   std::filesystem::directory_iterator{});
  EXPECT_EQ(before, after);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::vector<std::string>> commands{
      {"ic-stalk", "--input", sample("defective_pair.json"), "--json"},
      {"grid", "--n", "3", "--k", "3"},
      {"paper-examples", "--max-n", "3", "--max-k", "5", "--max-h", "3", "--json"}};
  for (const auto& c : commands) EXPECT_EQ(run_cli(c).out, run_cli(c).out);
}
