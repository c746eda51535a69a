#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "bruhat/bruhat.hpp"
#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = bruhat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, ClassifyIntervalReportsNonModularLattice) {
  const auto r = run({"classify-interval", "--order", "bruhat", "--bottom", "1324", "--top", "3412"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["predicate"]["lattice"], true);
  EXPECT_EQ(j["predicate"]["modular"], false);
  EXPECT_EQ(j["structural"]["lattice"], true);
  EXPECT_EQ(j["structural"]["modular"], false);
  EXPECT_EQ(j["agree"], true);
  EXPECT_EQ(j["rule"], "bruhat-atom-interval");
}

TEST(Cli, GeneratorInput) {
  for (const char* bottom : {"s2", "2"}) {
    const auto r = run({"classify-interval", "--bottom", bottom, "--top", "3412"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["bottom"], "1324");
  }
  const auto with_n = run({"classify-interval", "--bottom", "s1", "--top", "s1", "--n", "5"});
  ASSERT_EQ(with_n.code, 0) << with_n.err;
  EXPECT_EQ(nlohmann::json::parse(with_n.out)["top"], "21345");
  EXPECT_EQ(run({"classify-interval", "--bottom", "s1", "--top", "s2"}).code, 2);
}

TEST(Cli, ReducedWords) {
  const auto r = run({"reduced-words", "2143"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["count"], 2);
  EXPECT_EQ(j["words"], nlohmann::json::parse("[[1,3],[3,1]]"));
  EXPECT_EQ(run({"reduced-words", "2143", "--format", "text"}).out, "[1,3]\n[3,1]\n");
}

TEST(Cli, ClassifyPoi) {
  const auto r = run({"classify-poi", "321", "--order", "weak", "--structural"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["predicate"], j["structural"]);
  EXPECT_EQ(j["predicate"]["modular"], false);
  EXPECT_EQ(j["canonical_word"], nlohmann::json::parse("[1,2,1]"));
}

TEST(Cli, CensusTableFourCsv) {
  const auto r = run({"census", "--table", "4", "--n", "3..5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,k,order,class,counted,formula,match");
  EXPECT_NE(r.out.find("4,2,bruhat,boolean,16,16,true"), std::string::npos);
  EXPECT_EQ(count_lines(r.out), 1U + 2 + 3 + 4);
}

TEST(Cli, CensusJsonAndPretty) {
  const auto j = run({"census", "--table", "support", "--n", "4", "--format", "json"});
  ASSERT_EQ(j.code, 0);
  const auto rows = nlohmann::json::parse(j.out);
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_EQ(rows[0]["counted"], 15);
  EXPECT_EQ(rows[1]["counted"], 5);
  const auto p = run({"census", "--table", "3", "--n", "3", "--pretty"});
  ASSERT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("yes"), std::string::npos);
}

TEST(Cli, VerifyRange) {
  const auto r = run({"verify", "--n", "3..5", "--mode", "both", "--jobs", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "table,n,k,order,class,counted,formula,match");
  EXPECT_EQ(r.out.find(",false\n"), std::string::npos);
}

TEST(Cli, HasseGolden) {
  const auto r = run({"hasse", "--order", "bruhat", "--bottom", "213", "--top", "321"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "digraph \"bruhat [213,321]\" {\n"
            "  rankdir=BT;\n"
            "  node [shape=plaintext];\n"
            "  \"213\" [label=\"213\\n[1]\"];\n"
            "  \"231\" [label=\"231\\n[1,2]\"];\n"
            "  \"312\" [label=\"312\\n[2,1]\"];\n"
            "  \"321\" [label=\"321\\n[1,2,1]\"];\n"
            "  \"213\" -> \"231\";\n"
            "  \"213\" -> \"312\";\n"
            "  \"231\" -> \"321\";\n"
            "  \"312\" -> \"321\";\n"
            "}\n");
}

TEST(Cli, HasseShapes) {
  const auto fig = run({"hasse", "--bottom", "s2", "--top", "3412"});
  std::size_t nodes = 0;
  for (std::size_t pos = 0; (pos = fig.out.find("label=", pos)) != std::string::npos; ++pos) ++nodes;
  EXPECT_EQ(nodes, 10U);
  const auto full = run({"hasse", "--bottom", "1234", "--top", "4321", "--highlight-support"});
  std::size_t marked = 0;
  for (std::size_t pos = 0; (pos = full.out.find(", color=red", pos)) != std::string::npos; ++pos) ++marked;
  EXPECT_EQ(marked, 15U);
  EXPECT_EQ(full.out, run({"hasse", "--bottom", "1234", "--top", "4321", "--highlight-support"}).out);
  const auto point = run({"hasse", "--order", "weak", "--bottom", "2413", "--top", "2413"});
  EXPECT_EQ(count_lines(point.out), 5U);
}

TEST(Cli, PrintedPermutationsRoundTrip) {
  const auto r = run({"hasse", "--order", "weak", "--bottom", "1234", "--top", "4321"});
  std::istringstream in(r.out);
  std::string line;
  int nodes = 0;
  while (std::getline(in, line)) {
    if (line.find("label=") == std::string::npos) continue;
    const auto a = line.find('"') + 1;
    const std::string text = line.substr(a, line.find('"', a) - a);
    EXPECT_EQ(bruhat::to_string(bruhat::parse_permutation(text)), text);
    ++nodes;
  }
  EXPECT_EQ(nodes, 24);
}

TEST(Cli, ClassifyPosetFixture) {
  const auto r = run({"classify-poset", std::string(FIXTURE_DIR) + "/fig1c_diamond.txt"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["report"]["modular"], true);
  EXPECT_EQ(j["report"]["distributive"], false);
  EXPECT_EQ(run({"classify-poset", "/nonexistent/file"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"reduced-words", "3413"}).code, 2);
  EXPECT_EQ(run({"classify-interval", "--bottom", "2143", "--top", "1324"}).code, 2);
  EXPECT_EQ(run({"classify-interval", "--order", "left", "--bottom", "1", "--top", "1"}).code, 2);
  EXPECT_EQ(run({"census", "--table", "4", "--n", "3..12"}).code, 2);
  EXPECT_EQ(run({"census", "--table", "3", "--n", "6", "--mode", "structural"}).code, 2);
  EXPECT_EQ(run({"census", "--table", "3", "--n", "1..3"}).code, 2);
  EXPECT_EQ(run({"census", "--table", "3", "--n", "5..3"}).code, 2);
  EXPECT_EQ(run({"census", "--table", "9", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"reduced-words", "87654321"}).code, 2);
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("census"), std::string::npos);
}
