#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "faithgraph/axioms.hpp"
#include "faithgraph/cli.hpp"
#include "faithgraph/faithfulness.hpp"
#include "faithgraph/gaussian.hpp"
#include "faithgraph/text_formats.hpp"
#include "support/generators.hpp"

using namespace faithgraph;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("faithgraph_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

  static Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  fs::path dir_;
};

const char* kSigma = "1,2,3,4\n3,2,1,2\n2,4,2,1\n1,2,7,1\n2,1,1,6\n";
const char* kTransitivity = "nodes a b c\na _||_ c\na _||_ c | b\n";

}  // namespace

TEST_F(Cli, VersionAndUsage) {
  const Result v = run({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find(cli::kVersion), std::string::npos);
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"separate", "--a", "a"}).code, cli::kUsage);
  EXPECT_EQ(run({"classify", "--help"}).code, 0);
}

TEST_F(Cli, SeparateOnCollider) {
  const std::string g = file("g.graph", "a -> c\nb -> c\n");
  const Result given = run({"separate", "--graph", g, "--a", "a", "--b", "b", "--given", "c", "--witness"});
  EXPECT_EQ(given.code, cli::kNo);
  EXPECT_NE(given.out.find("not separated: a _||_ b | c"), std::string::npos);
  EXPECT_NE(given.out.find("connecting walk: a -> c <- b"), std::string::npos);
  const Result marginal = run({"separate", "--graph", g, "--a", "a", "--b", "b"});
  EXPECT_EQ(marginal.code, cli::kYes);
  EXPECT_EQ(marginal.out, "separated: a _||_ b\n");
}

TEST_F(Cli, GraphicalTransitivityExample) {
  const std::string m = file("m.ci", kTransitivity);
  const Result text = run({"graphical", "--model", m});
  EXPECT_EQ(text.code, cli::kNo);
  EXPECT_NE(text.out.find("not graphical: singleton-transitivity fails"), std::string::npos);
  const Result js = run({"--json", "graphical", "--model", m});
  EXPECT_EQ(js.code, cli::kNo);
  const auto doc = nlohmann::json::parse(js.out);
  EXPECT_EQ(doc["graphical"], false);
  EXPECT_EQ(doc["failure"]["property"], "singleton-transitivity");
}

TEST_F(Cli, GaussianSigmaPrintsTheIndependence) {
  const std::string cov = file("sigma.csv", kSigma);
  const Result r = run({"gaussian", "--cov", cov, "--print-model"});
  EXPECT_EQ(r.code, cli::kYes);
  EXPECT_NE(r.out.find("1 _||_ 3 | 2"), std::string::npos);
  EXPECT_NE(r.out.find("M-matrix: no"), std::string::npos);
  const std::string k4 = file("k4.graph", "1 -- 2\n1 -- 3\n1 -- 4\n2 -- 3\n2 -- 4\n3 -- 4\n");
  EXPECT_EQ(run({"gaussian", "--cov", cov, "--check-graph", k4}).code, cli::kNo);
}

TEST_F(Cli, GaussianUgConcentrationRole) {
  const std::string ug = file("path.graph", "a -- b\nb -- c\n");
  const Result r = run({"gaussian", "--ug", ug, "--eps", "-1/10", "--role", "concentration", "--check-graph", ug});
  EXPECT_EQ(r.code, cli::kYes);
  EXPECT_NE(r.out.find("M-matrix: yes"), std::string::npos);
  EXPECT_NE(r.out.find("faithful to"), std::string::npos);
}

TEST_F(Cli, MalformedInputsExitTwoWithLocation) {
  const std::string bad = file("bad.graph", "node a\nnode a\n");
  const Result r = run({"classify", "--graph", bad});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_NE(r.err.find("bad.graph:2:6"), std::string::npos);
  EXPECT_EQ(run({"classify", "--graph", (dir_ / "missing").string()}).code, cli::kUsage);
  const std::string multi = file("multi.graph", "a -> b\na -- b\n");
  EXPECT_EQ(run({"classify", "--graph", multi}).code, cli::kUsage);
  const std::string m = file("m.ci", kTransitivity);
  EXPECT_EQ(run({"axioms", "--model", m, "--property", "nonsense"}).code, cli::kUsage);
  EXPECT_EQ(run({"axioms"}).code, cli::kUsage);
  EXPECT_EQ(run({"axioms", "--model", m, "--model-graph", m}).code, cli::kUsage);
}

TEST_F(Cli, ExitCodeDoesNotDependOnFormat) {
  const std::string m = file("m.ci", kTransitivity);
  const std::string chain = file("chain.graph", "a -> b\nb -> c\n");
  const std::vector<std::vector<std::string>> commands = {
      {"axioms", "--model", m},
      {"axioms", "--model-graph", chain},
      {"stability", "--model", m, "--trivial", "equivalent"},
      {"stability", "--model", m, "--preorder-of", chain, "--dag"},
      {"markov", "--model", m, "--graph", chain},
      {"markov", "--model", m, "--graph", chain, "--mode", "pairwise"},
      {"faithful", "--model-graph", chain, "--graph", chain},
      {"graphical", "--model-graph", chain, "--class-filter", "DAG"},
      {"separate", "--graph", chain, "--a", "a", "--b", "c", "--given", "b"},
  };
  for (const auto& c : commands) {
    std::vector<std::string> with_json = c;
    with_json.insert(with_json.begin(), "--json");
    const Result plain = run(c);
    const Result js = run(with_json);
    EXPECT_EQ(plain.code, js.code) << c[0];
    EXPECT_LE(plain.code, 1) << c[0] << plain.err;
    EXPECT_TRUE(nlohmann::json::accept(js.out)) << c[0];
  }
}

TEST_F(Cli, VerbsMatchLibraryCalls) {
  faithgraph::testing::Rng rng(12);
  for (int t = 0; t < 10; ++t) {
    const MixedGraph g = faithgraph::testing::random_ang(4, rng, 0.5);
    const IndependenceModel j = induced_model(g);
    const std::string gp = file("g.graph", serialize_graph(g));
    // Perturb the model so that both outcomes occur.
    IndependenceModel k = j;
    if (t % 2) k = faithgraph::testing::flipped(j, 0, 1, NodeSet{});
    const std::string mp = file("k.ci", serialize_model(k));

    EXPECT_EQ(run({"model", "--graph", gp}).out, serialize_model(j));
    EXPECT_EQ(run({"faithful", "--model", mp, "--graph", gp}).code, is_faithful(k, g) ? 0 : 1);
    EXPECT_EQ(run({"markov", "--model", mp, "--graph", gp}).code, is_markov(k, g) ? 0 : 1);
    EXPECT_EQ(run({"markov", "--model", mp, "--graph", gp, "--mode", "minimal"}).code,
              is_minimally_markov(k, g) ? 0 : 1);

    const FaithfulnessVerdict v = decide_graphical(k);
    const Result r = run({"--json", "graphical", "--model", mp});
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(r.code, v.graphical() ? 0 : 1);
    ASSERT_EQ(doc["witnesses"].size(), v.witnesses.size());
    for (std::size_t w = 0; w < v.witnesses.size(); ++w) {
      EXPECT_EQ(parse_graph(doc["witnesses"][w].get<std::string>()), v.witnesses[w]);
    }

    const Result ax = run({"--json", "axioms", "--model", mp, "--property", "singleton-transitivity"});
    EXPECT_EQ(nlohmann::json::parse(ax.out)["reports"][0]["count"], check_singleton_transitivity(k).count);
  }
}

TEST_F(Cli, AlphaMatchesLibraryAndIsDeterministic) {
  const std::string chain = file("chain.graph", "a -> b\nb -> c\n");
  const Result r = run({"alpha", "--model-graph", chain, "--marginalize", "b"});
  EXPECT_EQ(r.code, 0);
  const IndependenceModel j = induced_model(parse_graph("a -> b\nb -> c\n"));
  EXPECT_NE(r.out.find(serialize_model(alpha(j, NodeSet::of(1), {}))), std::string::npos);
  const Result x = run({"alpha", "--model-graph", chain, "--random-split", "--seed", "5"});
  const Result y = run({"alpha", "--model-graph", chain, "--random-split", "--seed", "5"});
  EXPECT_EQ(x.out, y.out);
  EXPECT_EQ(run({"alpha", "--model-graph", chain, "--marginalize", "b", "--condition", "b"}).code, cli::kUsage);
}

TEST_F(Cli, CapsAreEnforced) {
  const std::string m = file("m.ci", kTransitivity);
  const Result r = run({"--cap", "2", "axioms", "--model", m});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_NE(r.err.find("cap"), std::string::npos);
}
