#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <gtest/gtest.h>

#include "json.hpp"

#include "diamclust/cli.hpp"
#include "diamclust/graph.hpp"
#include "diamclust/io.hpp"
#include "test_support.hpp"

using namespace diamclust;
using namespace diamclust::testing;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "diamclust");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("diamclust_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write_graph_file(const std::string& name, const Graph& g) const {
    std::ofstream f(path(name));
    write_graph(f, g);
    return path(name);
  }

  std::string write_points(const std::string& name, const PointSet& p) const {
    write_point_set_file(path(name), p);
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, SolveSquare) {
  const std::string pts = write_points("square.json", unit_square());
  const CliResult r = cli({"solve", "--points", pts, "--r", "1", "--eps", "0.1", "--exact", "--trivial"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = r.parsed();
  EXPECT_GE(j["size"].get<int>(), 2);
  EXPECT_EQ(j["opt_size"], 2);
  EXPECT_EQ(j["k_used"], 7);
  EXPECT_TRUE(j["guarantee_ok"].get<bool>());
  EXPECT_TRUE(j.contains("trivial"));
  const auto idx = j["indices"].get<IndexSet>();
  EXPECT_EQ(idx.size(), j["size"].get<std::size_t>());
  EXPECT_NEAR(j["diameter"].get<double>(), naive_diameter(unit_square(), idx), 1e-12);
  EXPECT_LE(j["diameter"].get<double>(), std::sqrt(2.0) + 0.1 + 1e-9);
}

TEST_F(CliTest, SolveWritesOutFile) {
  const std::string pts = write_points("line.json", on_line({0.0, 0.5, 1.0, 5.0}));
  const CliResult r = cli({"solve", "--points", pts, "--r", "1", "--out", path("res.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path("res.json"));
  const json j = json::parse(f);
  EXPECT_EQ(j["size"], 3);
  EXPECT_EQ(j["indices"], json({0, 1, 2}));
}

TEST_F(CliTest, SolveK) {
  const std::string pts = write_points("line.json", on_line({0.0, 0.1, 0.2, 3.0, 7.0}));
  const CliResult r = cli({"solve-k", "--points", pts, "--k", "3", "--exact"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = r.parsed();
  EXPECT_GE(j["size"].get<int>(), 3);
  EXPECT_NEAR(j["opt_diameter"].get<double>(), 0.2, 1e-12);
  EXPECT_LE(j["diameter"].get<double>(), (std::sqrt(2.0) + 0.25) * 0.2 + 1e-9);
  EXPECT_TRUE(j["guarantee_ok"].get<bool>());
}

TEST_F(CliTest, EmbedWithAndWithoutProjection) {
  const std::string g = write_graph_file("petersen.txt", graphs::petersen());
  for (bool jl : {true, false}) {
    std::vector<std::string> args{"embed", "--graph", g, "--gamma", "0.01", "--out", path("emb.json")};
    if (!jl) args.push_back("--no-jl");
    const CliResult r = cli(args);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::ifstream f(path("emb.json"));
    const json j = json::parse(f);
    const json& meta = j["metadata"];
    EXPECT_NEAR(meta["threshold_r"].get<double>(), 1.05 * std::sqrt(6.02), 1e-12);
    EXPECT_LE(meta["max_distortion"].get<double>(), 1.05 + 1e-12);

    // The written file is a valid point set whose optimum at the threshold is the independence number.
    const PointSet pts = read_point_set_file(path("emb.json"));
    EXPECT_EQ(pts.size(), 10u);
    EXPECT_EQ(pts.dim(), meta["dim"].get<std::size_t>());
    const CliResult s = cli({"solve", "--points", path("emb.json"), "--r",
                       std::to_string(meta["threshold_r"].get<double>()), "--exact"});
    ASSERT_EQ(s.code, kExitOk) << s.err;
    EXPECT_EQ(s.parsed()["opt_size"], 4);
  }
}

TEST_F(CliTest, MisAndClique) {
  const CliResult mis = cli({"mis", "--graph", write_graph_file("c5.txt", graphs::cycle(5))});
  ASSERT_EQ(mis.code, kExitOk) << mis.err;
  EXPECT_EQ(mis.parsed()["alpha"], 2);

  const CliResult clique = cli({"clique", "--graph", write_graph_file("k4.txt", graphs::complete(4))});
  ASSERT_EQ(clique.code, kExitOk) << clique.err;
  EXPECT_EQ(clique.parsed()["omega"], 4);
  EXPECT_EQ(clique.parsed()["vertices"], json({0, 1, 2, 3}));
}

TEST_F(CliTest, Gen) {
  const CliResult g = cli({"gen", "--kind", "random-3regular", "--n", "10", "--seed", "3"});
  ASSERT_EQ(g.code, kExitOk) << g.err;
  std::istringstream in(g.out);
  const Graph graph = read_graph(in);
  EXPECT_TRUE(graph.is_regular(3));
  EXPECT_EQ(graph, random_3regular(10, 3));

  const CliResult p = cli({"gen", "--kind", "planted-cluster", "--n", "12", "--dim", "3",
                     "--planted-size", "4", "--seed", "5"});
  ASSERT_EQ(p.code, kExitOk) << p.err;
  const json j = p.parsed();
  EXPECT_EQ(j["planted"], json({0, 1, 2, 3}));
  const PointSet pts = point_set_from_json(j);
  EXPECT_EQ(pts.size(), 12u);
  EXPECT_EQ(pts.dim(), 3u);
  EXPECT_LE(naive_diameter(pts, {0, 1, 2, 3}), 1.0 + 1e-12);
}

TEST_F(CliTest, Compare) {
  fs::create_directories(dir_ / "corpus");
  for (int seed = 1; seed <= 6; ++seed)
    ASSERT_EQ(cli({"gen", "--kind", "uniform-cube", "--n", "9", "--dim", "2", "--seed",
                   std::to_string(seed), "--out", path("corpus/p" + std::to_string(seed) + ".json")})
                  .code,
              kExitOk);
  const CliResult r = cli({"compare", "--corpus", path("corpus"), "--r", "0.4", "--solvers",
                     "approx,trivial,exact", "--parallel", "2", "--no-timing"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = r.parsed();
  EXPECT_EQ(j["instances"].size(), 6u);
  EXPECT_FALSE(j["guarantee_violated"].get<bool>());
  EXPECT_GE(j["aggregate"]["approx"]["worst_size_ratio"].get<double>(), 1.0);
  EXPECT_FALSE(j["instances"][0]["solvers"]["approx"].contains("wall_ms"));
  EXPECT_NE(r.err.find("worst_size"), std::string::npos);

  const CliResult k = cli({"compare", "--corpus", path("corpus"), "--k", "3", "--no-timing"});
  ASSERT_EQ(k.code, kExitOk) << k.err;
  EXPECT_EQ(k.parsed()["instances"][0]["k_target"], 3);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"solve", "--r", "1"}).code, kExitUsage);
  EXPECT_EQ(cli({"solve", "--points", path("absent.json"), "--r", "1"}).code, kExitUsage);
  EXPECT_EQ(cli({"mis", "--graph", path("absent.txt")}).code, kExitUsage);
  EXPECT_EQ(cli({"gen", "--kind", "spiral", "--n", "4"}).code, kExitUsage);
  EXPECT_EQ(cli({"compare", "--corpus", path("nowhere"), "--r", "1"}).code, kExitUsage);
  EXPECT_EQ(cli({"--help"}).code, kExitOk);

  std::ofstream(path("bad.json")) << "{\"points\": [[0, 1], [2]]}";
  const CliResult bad = cli({"solve", "--points", path("bad.json"), "--r", "1"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_FALSE(bad.err.empty());
}

TEST_F(CliTest, PreconditionFailures) {
  const CliResult lk5 =
      cli({"clique", "--graph", write_graph_file("lk5.txt", graphs::line_graph(graphs::complete(5)))});
  EXPECT_EQ(lk5.code, kExitPrecondition);
  EXPECT_NE(lk5.err.find("precondition"), std::string::npos);

  EXPECT_EQ(cli({"embed", "--graph", write_graph_file("c6.txt", graphs::cycle(6))}).code,
            kExitPrecondition);
}
