#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = kac::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "kacsuper_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Cli, TableHasCorrectionTerms) {
  Result r = run({"table", "k10", "--field", "rational"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = r.j();
  EXPECT_EQ(j["dim"], 10);
  int corrections = 0;
  for (const auto& t : j["constants"]) {
    if (t[2] == 0 && t[3] == "-3/16") ++corrections;
  }
  EXPECT_GE(corrections, 1);
  EXPECT_NE(r.err.find("nonzero structure constants"), std::string::npos);
}

TEST(Cli, VerifyK9InCharacteristicThree) {
  EXPECT_EQ(run({"verify", "k9", "--field", "fp:3"}).code, 0);
  EXPECT_EQ(run({"--field", "fp:3", "verify", "k9"}).code, 0);
  EXPECT_EQ(run({"verify", "k9", "--field", "fp:5"}).code, 2);
}

TEST(Cli, VerifyFailureExitsOne) {
  auto p = scratch("noncomm.json");
  write(p, R"({"domain":"rational","dim":2,"parity":[0,0],"labels":["x","y"],
              "constants":[[0,1,0,"1"]]})");
  Result r = run({"verify", p.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.j()["supercommutative"]["ok"].get<bool>());
}

TEST(Cli, GradingCensus) {
  Result r = run({"grading", "census", "--q", "3", "--algebra", "k10"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.j()["classes"], 4);
  EXPECT_EQ(r.j()["predicted_classes"], 4);
}

TEST(Cli, SimpleVerdicts) {
  Result a = run({"simple", "k10", "--field", "fp:3", "--expect", "not-simple"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.j()["ideal"]["dim"], 9);
  EXPECT_EQ(run({"simple", "k10", "--field", "fp:5", "--expect", "simple"}).code, 0);
  EXPECT_EQ(run({"simple", "k10", "--field", "fp:5", "--expect", "not-simple"}).code, 1);
  EXPECT_EQ(run({"simple", "k10"}).j()["certificate"], "simple mod 5");
}

TEST(Cli, DerivationsAndAutomorphisms) {
  Result d = run({"derivations", "k10", "--parity", "even", "--field", "fp:7"});
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(d.j()["dimension"], 6);
  EXPECT_TRUE(d.j()["closed_under_bracket"].get<bool>());

  Result c = run({"check-auto", "k10", "--random", "20", "--seed", "5", "--field", "fp:5"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.j()["passed"], 20);

  auto p = scratch("scale.json");
  json m = json::array();
  for (int r = 0; r < 10; ++r) {
    json row = json::array();
    for (int k = 0; k < 10; ++k) row.push_back(r == k ? (r >= 6 ? "2" : "1") : "0");
    m.push_back(row);
  }
  write(p, json{{"matrix", m}, {"parity", "even"}}.dump());
  Result bad = run({"check-auto", "k10", p.string()});
  EXPECT_EQ(bad.code, 1);
  EXPECT_FALSE(bad.j()["morphism"]["ok"].get<bool>());
}

TEST(Cli, GradingFilesRoundTrip) {
  auto a = scratch("g_a.json"), b = scratch("g_b.json");
  ASSERT_EQ(run({"-o", a.string(), "grading", "make", "--family", "1", "--rank", "1", "--g1",
                 "1", "--g2", "2"})
                .code,
            0);
  ASSERT_EQ(run({"-o", b.string(), "grading", "make", "--family", "1", "--rank", "1", "--g1",
                 "2", "--g2=-1"})
                .code,
            0);
  EXPECT_EQ(run({"grading", "verify", a.string()}).code, 0);
  Result cl = run({"grading", "classify", a.string()});
  ASSERT_EQ(cl.code, 0) << cl.err;
  EXPECT_EQ(cl.j()["label"]["family"], 1);
  Result cmp = run({"grading", "compare", a.string(), b.string()});
  ASSERT_EQ(cmp.code, 0) << cmp.err;
  EXPECT_TRUE(cmp.j()["isomorphic"].get<bool>());
  EXPECT_TRUE(cmp.j().contains("witness"));
  EXPECT_EQ(run({"grading", "fine", "--algebra", "k3xk3"}).code, 0);
}

TEST(Cli, TwistReportsTheOddDiscrepancy) {
  Result r = run({"twist", "--algebra", "k10", "--d=-1", "--field", "rational"});
  ASSERT_EQ(r.code, 0) << r.err;
  json rep = r.j()["report"];
  EXPECT_TRUE(rep["basis_comparison"]["expected_even_matches"].get<bool>());
  EXPECT_FALSE(rep["basis_comparison"]["listed_odd_is_fixed"].get<bool>());
  EXPECT_EQ(rep["basis_comparison"]["discrepancies"].size(), 2u);
  EXPECT_TRUE(rep["splits"]["ok"].get<bool>());
  Result e = run({"twist", "--algebra", "k10", "--d=-1", "--against=-4"});
  ASSERT_EQ(e.code, 0);
  EXPECT_TRUE(e.j()["equivalent"].get<bool>());
}

TEST(Cli, SeparateTwistedFromSplit) {
  auto t = scratch("twist5.json");
  ASSERT_EQ(run({"-o", t.string(), "twist", "--algebra", "k10", "--d", "2", "--field", "fp:5"}).code, 0);
  Result r = run({"separate", "k10", t.string(), "--field", "fp:5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.j()["verdict"], "distinct");
  Result c = run({"census", "k3xk3", "--even", "--field", "fp:3"});
  EXPECT_EQ(c.j()["idempotents"], 4);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"table", "k10", "--field", "fp:4"}).code, 2);
  EXPECT_EQ(run({"table", "nosuch.json"}).code, 2);
  EXPECT_EQ(run({"grading", "make", "--family", "2", "--rank", "1", "--g", "1", "--h", "1"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"table", "k10"},
           {"check-auto", "k10", "--random", "5", "--seed", "9"},
           {"twist", "--algebra", "k10", "--d", "2", "--field", "fp:5"},
           {"grading", "census", "--q", "3", "--algebra", "k3xk3"}}) {
    Result a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}
