#include "qhodge/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qhodge::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ThetaSeriesJson) {
  const Result r = run({"series", "--target", "theta", "--a", "0", "--order", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            R"({"den":24,"cap":48,"terms":[{"q":0,"coeff":[{"x":0,"y":0,"c":"1"}]},)"
            R"({"q":24,"coeff":[{"x":1,"y":1,"c":"1"},{"x":3,"y":3,"c":"1"}]}]})"
            "\n");
}

TEST(Cli, SeriesTextFormat) {
  const Result r =
      run({"series", "--target", "z1-bracket", "--a", "1", "--cap-num", "30", "--format", "text"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "# cap q^5/4\n1/4  x*y + 1\n5/4  x^3*y^3 - x*y\n");
}

TEST(Cli, OutputIsByteStable) {
  const std::vector<std::string> args{"series", "--target", "blowup-genfun", "--a", "1",
                                      "--order", "3", "--mode", "per-n"};
  const Result a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, run({"series", "--target", "blowup-genfun", "--a", "1", "--order", "3"}).out);
}

TEST(Cli, SeriesToFile) {
  const std::string path = ::testing::TempDir() + "qhodge_cli_series.json";
  const Result r = run({"series", "--target", "eta-sq", "--cap-num", "2", "--output", path});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  EXPECT_EQ(buf.str(), R"({"den":24,"cap":2,"terms":[{"q":2,"coeff":[{"x":0,"y":0,"c":"1"}]}]})"
                       "\n");
  std::remove(path.c_str());
}

TEST(Cli, ChecksPass) {
  EXPECT_EQ(run({"check", "--name", "thm-3.9", "--a", "0", "--order", "10"}).code, 0);
  EXPECT_EQ(run({"check", "--name", "eq-2.17", "--order", "5"}).code, 0);
  EXPECT_EQ(run({"check", "--name", "lemma-2.8", "--order", "4"}).code, 0);
  EXPECT_EQ(run({"check", "--name", "lemma-2.10", "--order", "3"}).code, 0);
  EXPECT_EQ(run({"check", "--name", "thm-2.15", "--order", "3"}).code, 0);
  EXPECT_EQ(run({"check", "--name", "lemma-3.1-strata", "--order", "0"}).code, 0);
  EXPECT_EQ(run({"check", "--name", "spec-xy1", "--order", "6"}).code, 0);
}

TEST(Cli, CheckAliasesMatchNames) {
  for (const auto& [alias, name] : qhodge::cli::check_aliases()) {
    const Result a = run({"check", "--name", alias, "--order", "2"});
    const Result b = run({"check", "--name", name, "--order", "2"});
    EXPECT_EQ(a.code, 0) << alias << a.err;
    EXPECT_EQ(a.out, b.out) << alias;
  }
}

TEST(Cli, FiniteFieldCheckReportsCounts) {
  const Result r = run({"check", "--name", "lemma-3.1-ffield", "--order", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("p=2 (1,1) count 6 vs e(U) at t=p 6"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, CheckJson) {
  const Result r =
      run({"check", "--name", "thm-3.9", "--a", "1", "--order", "2", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = qhodge::ordered_json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_TRUE(j[0]["pass"].get<bool>());
  EXPECT_TRUE(j[0]["first_diff"].is_null());
}

TEST(Cli, ProbeJson) {
  const Result r = run({"probe", "--a", "1", "--order", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"order\":4,\"agree\":true,\"first_diff\":null}\n");
}

TEST(Cli, Oracles) {
  const Result c = run({"oracle", "--target", "count-u", "--p", "2", "--m1", "1", "--m2", "1"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "#U(1,1)(F_2) = 6, e(U) at t=2 = 6\n");
  const Result w = run({"oracle", "--target", "walls", "--n", "1", "--box", "10"});
  EXPECT_EQ(w.code, 0);
  EXPECT_NE(w.out.find("zeta=(1,-2) zeta^2=-5 zeta.K=3 ell=0"), std::string::npos);
  EXPECT_EQ(run({"oracle", "--target", "walls-blowup", "--a", "1", "--n", "2", "--box", "8"}).code,
            0);
  EXPECT_EQ(run({"oracle", "--target", "dense-mul", "--order", "2", "--trials", "10"}).code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"series"}).code, 2);
  EXPECT_EQ(run({"series", "--target", "nope"}).code, 2);
  EXPECT_EQ(run({"series", "--target", "theta", "--a", "2"}).code, 2);
  EXPECT_EQ(run({"series", "--target", "theta", "--order", "-1"}).code, 2);
  EXPECT_EQ(run({"series", "--target", "theta", "--cap-num", "-3"}).code, 2);
  EXPECT_EQ(run({"check", "--name", "thm-9.9"}).code, 2);
  EXPECT_EQ(run({"series", "--target", "base-genfun", "--H", "1,3"}).code, 2);
  EXPECT_EQ(run({"oracle", "--target", "count-u", "--p", "2", "--m1", "4", "--m2", "4"}).code, 2);
  const Result r = run({"bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, Help) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("series"), std::string::npos);
}
