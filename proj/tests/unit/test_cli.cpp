#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fpbl/io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fpbl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, Count) {
  auto r = run({"count", "--tau", "321", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"k,count", "0,6", "1,4", "2,3", "3,0", "4,1"}));
  r = run({"count", "--tau", "231", "--n", "3"});
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"k,count", "0,1", "1,3", "2,0", "3,1"}));
  r = run({"count", "--tau", "321", "--n", "1"});
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"k,count", "0,0", "1,1"}));
  EXPECT_EQ(run({"count", "--tau", "231", "--n", "13"}).code, fpbl::cli::kRefused);
  EXPECT_EQ(run({"count", "--tau", "321", "--n", "12", "--mode", "eval"}).out,
            run({"count", "--tau", "321", "--n", "12"}).out);
}

TEST(Cli, Pmf) {
  auto r = run({"pmf", "--n", "3", "--q", "2", "--tau", "321"});
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"k,probability", "0,1/7", "1,2/7", "2,0", "3,4/7"}));
  r = run({"pmf", "--n", "2", "--q", "1"});
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"k,probability", "0,1/2", "1,0", "2,1/2"}));
  r = run({"--format", "json", "pmf", "--n", "1000", "--q", "3", "--tau", "321", "--mode", "scaled-float"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  long double s = 0;
  for (const auto& w : j["weights"]) s += w[1].get<double>();
  EXPECT_NEAR(static_cast<double>(s), 1.0, 1e-12);
  EXPECT_EQ(j["mode"], "scaled-float");
  EXPECT_TRUE(j["seed"].is_null());
}

TEST(Cli, DecimalQIsExact) {
  const auto a = run({"pmf", "--n", "4", "--q", "0.5", "--tau", "132"});
  const auto b = run({"pmf", "--n", "4", "--q", "1/2", "--tau", "132"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"pmf", "--n", "4", "--q", "-1"}).code, fpbl::cli::kUsage);
  EXPECT_EQ(run({"pmf", "--n", "4", "--tau", "999"}).code, fpbl::cli::kUsage);
}

TEST(Cli, JsonRoundTrip) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--format", "json", "pmf", "--n", "6", "--q", "2/3", "--tau", "213"},
           {"--format", "json", "pmf", "--n", "300", "--q", "5/2", "--tau", "321", "--mode", "scaled-float"},
           {"--format", "json", "zn", "--n-max", "6", "--tau", "132"},
           {"--format", "json", "zn", "--n-max", "40", "--q", "1/3", "--tau", "132", "--mode", "scaled-float"},
           {"--format", "json", "sample", "--n", "30", "--q", "1/2", "--tau", "132", "--count", "20", "--emit", "perm"},
           {"--format", "json", "asym", "--kind", "lemma1", "--q", "2", "--n-grid", "10,20"},
           {"--format", "json", "explore", "--tau", "312", "--n-max", "6", "--q-grid", "1/2,2"},
       }) {
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(fpbl::canonical_json(r.out), r.out) << args[2];
  }
}

TEST(Cli, SampleIsDeterministic) {
  const auto a = run({"sample", "--n", "100", "--q", "2", "--count", "1000", "--seed", "7"});
  const auto b = run({"sample", "--n", "100", "--q", "2", "--count", "1000", "--seed", "7"});
  const auto c = run({"sample", "--n", "100", "--q", "2", "--count", "1000", "--seed", "8"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  const auto l = lines(a.out);
  std::size_t header = 0;
  while (l[header][0] == '#') ++header;
  EXPECT_EQ(l[header], "sample_index,fp");
  EXPECT_EQ(l.size() - header - 1, 1000u);
  EXPECT_EQ(l[0], "# seed=7");
}

TEST(Cli, SampleRefusesSupercriticalPermutations) {
  const auto r = run({"sample", "--n", "20", "--q", "4", "--tau", "321", "--emit", "perm"});
  EXPECT_EQ(r.code, fpbl::cli::kRefused);
  EXPECT_NE(r.err.find("unsupported"), std::string::npos);
  EXPECT_EQ(run({"sample", "--n", "20", "--q", "4", "--tau", "321"}).code, 0);
}

TEST(Cli, Verify) {
  auto r = run({"verify", "--theorem", "1", "--q", "2", "--n", "200"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.err.rfind("PASS", 0), 0u) << r.err;
  r = run({"verify", "--theorem", "3", "--q", "2", "--n", "1000"});
  EXPECT_EQ(r.code, 0) << r.err;
  r = run({"verify", "--theorem", "5", "--q", "4", "--n", "2000"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("kolmogorov="), std::string::npos);
  // A tolerance nobody can meet fails with exit code 1.
  r = run({"verify", "--theorem", "3", "--q", "2", "--n", "50", "--tolerance", "1e-9"});
  EXPECT_EQ(r.code, fpbl::cli::kFail);
  EXPECT_EQ(r.err.rfind("FAIL", 0), 0u);
  // Incompatible theorem and q.
  EXPECT_EQ(run({"verify", "--theorem", "4", "--q", "2"}).code, fpbl::cli::kRefused);
  r = run({"verify", "--lemma1", "--q", "4", "--n", "200"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, Explore) {
  const auto r = run({"explore", "--tau", "231", "--n-max", "10", "--q", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 11u);
  double prev = 0;
  for (std::size_t i = 1; i < l.size(); ++i) {
    std::istringstream row(l[i]);
    std::string n, q, tau, mean;
    std::getline(row, n, ',');
    std::getline(row, q, ',');
    std::getline(row, tau, ',');
    std::getline(row, mean, ',');
    const double m = std::stod(mean);
    EXPECT_GT(m, prev) << l[i];
    prev = m;
  }
}

TEST(Cli, AsymAndZn) {
  auto r = run({"asym", "--kind", "regime", "--q", "4"});
  EXPECT_NE(r.out.find("supercritical,2/9,"), std::string::npos) << r.out;
  r = run({"asym", "--kind", "rayleigh", "--m", "2"});
  EXPECT_NE(r.out.find(",9"), std::string::npos) << r.out;
  r = run({"zn", "--n", "3", "--q", "2", "--tau", "321"});
  EXPECT_EQ(lines(r.out).back(), "3,,14,exact-eval");
  r = run({"zn", "--n", "4", "--q", "0", "--tau", "321"});
  EXPECT_EQ(r.code, fpbl::cli::kUsage);
}

TEST(Cli, OutFileAndBudgetEnv) {
  const std::string path = ::testing::TempDir() + "fpbl_cli_out.csv";
  auto r = run({"count", "--tau", "132", "--n", "5", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), run({"count", "--tau", "132", "--n", "5"}).out);
  std::remove(path.c_str());

  ::setenv("FPBL_BUDGET", "float=100", 1);
  EXPECT_EQ(run({"pmf", "--n", "101", "--q", "2", "--tau", "321", "--mode", "scaled-float"}).code, fpbl::cli::kRefused);
  ::unsetenv("FPBL_BUDGET");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, fpbl::cli::kUsage);
  EXPECT_EQ(run({"bogus"}).code, fpbl::cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"pmf", "--n", "3", "--mode", "fast"}).code, fpbl::cli::kUsage);
}
