#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

using nlohmann::json;
using pangular::cli::run_cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json body_of(const CliRun& r) { return json::parse(r.out).at("body"); }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("pangular_" + name)).string();
}

}  // namespace

TEST(Cli, ComputeReportsAlphaBetaAndClosedForm) {
  const CliRun r = run({"compute", "--norm", "l2", "--x", "3,0", "--y", "0,4", "--p", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc.at("header").at("tool"), "pangular");
  EXPECT_TRUE(doc.at("header").contains("timestamp"));
  EXPECT_EQ(doc.at("config").at("command"), "compute");
  const json b = doc.at("body");
  EXPECT_NEAR(b.at("alpha").get<double>(), 18.357559750685819298, 1e-12);
  EXPECT_NEAR(b.at("beta").get<double>(), 16.970562748477140586, 1e-12);
  EXPECT_TRUE(b.contains("closed_form"));
  EXPECT_LT(b.at("closed_form").at("abs_diff").get<double>(), 1e-12);
}

TEST(Cli, ComputeWithoutInnerProductOmitsClosedForm) {
  const CliRun r = run({"compute", "--norm", "l1", "--x", "1,0", "--y", "0.5,0.5", "--p", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(body_of(r).contains("closed_form"));
}

TEST(Cli, InvalidInputExitsOne) {
  EXPECT_EQ(run({"compute", "--norm", "bogus", "--x", "1", "--y", "2", "--p", "2"}).code, 1);
  EXPECT_EQ(run({"compute", "--x", "1,2", "--y", "2", "--p", "2"}).code, 1);
  EXPECT_EQ(run({"compute", "--x", "0,0", "--y", "1,2", "--p", "2"}).code, 1);
  EXPECT_EQ(run({"compute", "--x", "1,0", "--y", "1,2"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  const CliRun e = run({"compute", "--x", "0,0", "--y", "1,2", "--p", "2"});
  EXPECT_NE(e.err.find("zero_vector"), std::string::npos) << e.err;
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, BoundsAllHoldAndSkipsAreExplained) {
  const CliRun r = run({"bounds", "--x", "3,0", "--y", "0,4", "--p", "2", "--q", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json b = body_of(r);
  EXPECT_TRUE(b.at("all_hold").get<bool>());
  for (const auto& row : b.at("bounds")) {
    if (!row.at("applicable").get<bool>()) EXPECT_FALSE(row.at("reason").get<std::string>().empty());
  }
}

TEST(Cli, BoundsChain) {
  const CliRun r =
      run({"bounds", "--norm", "l1", "--x", "1,0", "--y", "1,1", "--p", "4", "--q", "2", "--chain"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(body_of(r).at("chain").at("terms").size(), 6u);
}

TEST(Cli, CertifyExitCodes) {
  const CliRun bad = run({"certify", "--norm", "l1", "--criterion", "alpha-beta", "--samples", "500"});
  EXPECT_EQ(bad.code, 2) << bad.err;
  EXPECT_EQ(body_of(bad).at("verdict"), "CounterexampleFound");
  const CliRun good = run({"certify", "--norm", R"({"kind":"gram","gram":[[2,0],[0,1]]})",
                        "--criterion", "identity", "--samples", "500"});
  EXPECT_EQ(good.code, 0) << good.err;
  EXPECT_EQ(run({"certify", "--criterion", "nope"}).code, 1);
  EXPECT_EQ(run({"certify", "--norm", "l1", "--criterion", "dual", "--samples", "200"}).code, 2);
}

TEST(Cli, CertifyIsDeterministicAndSeedable) {
  const std::vector<std::string> args{"certify", "--norm", "lp:3", "--criterion", "lorch",
                                      "--samples", "300", "--seed", "17"};
  EXPECT_EQ(body_of(run(args)), body_of(run(args)));
  auto serial = args;
  serial.push_back("--serial");
  EXPECT_EQ(body_of(run(args)), body_of(run(serial)));
}

TEST(Cli, SeedFromEnvironment) {
  const std::vector<std::string> args{"certify", "--norm", "l1", "--criterion", "shifted",
                                      "--samples", "100"};
  setenv("PANGULAR_SEED", "42", 1);
  const json with_env = json::parse(run(args).out);
  unsetenv("PANGULAR_SEED");
  EXPECT_EQ(with_env.at("config").at("seed"), 42);
  auto explicit_seed = args;
  explicit_seed.insert(explicit_seed.end(), {"--seed", "42"});
  EXPECT_EQ(with_env.at("body"), body_of(run(explicit_seed)));
}

TEST(Cli, ReplayReproducesBody) {
  const std::string report = temp_path("report.json");
  const CliRun first = run({"audit", "--norm", "linf", "--p", "1.5", "--metric", "--samples", "500",
                         "--seed", "3", "-o", report});
  ASSERT_EQ(first.code, 0) << first.err;
  const CliRun again = run({"replay", "--config", report});
  ASSERT_EQ(again.code, 0) << again.err;
  std::ifstream in(report);
  EXPECT_EQ(json::parse(in).at("body"), body_of(again));
  std::filesystem::remove(report);
  EXPECT_EQ(run({"replay", "--config", temp_path("missing.json")}).code, 1);
}

TEST(Cli, AuditSections) {
  const CliRun r = run({"audit", "--p", "2", "--beta-witness", "--translation", "--consistency"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json b = body_of(r);
  EXPECT_GT(b.at("beta_witness").at("margin").get<double>(), 0.0);
  EXPECT_GT(b.at("translation").at("gap").get<double>(), 0.0);
  EXPECT_EQ(b.at("consistency").size(), 3u);
  EXPECT_EQ(run({"audit", "--p", "2"}).code, 1);
}

TEST(Cli, AuditCsvTables) {
  const CliRun r = run({"audit", "--completeness", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("N,modulus,sampled"), std::string::npos);
  const CliRun n = run({"audit", "--nonequiv", "--p", "2", "--q", "1", "--t", "0.5", "--n", "10,100",
                     "--format", "csv"});
  ASSERT_EQ(n.code, 0) << n.err;
  EXPECT_NE(n.out.find("n,constant,kernel_ratio"), std::string::npos);
}

TEST(Cli, SweepCsv) {
  const CliRun r = run({"sweep", "--best-constant", "--p", "2", "--q", "1", "--eps", "1,0.1,0.01"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# limit=2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("eps,ratio\n1,1.5\n"), std::string::npos) << r.out;
  const CliRun s = run({"sweep", "--series", "--x", "1,0", "--y", "0.6,0.5", "--p", "2", "--K",
                     "4,8,16", "--format", "json"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(body_of(s).at("rows").size(), 3u);
  EXPECT_EQ(run({"sweep", "--best-constant", "--p", "2", "--q", "1"}).code, 1);
  EXPECT_EQ(run({"compute", "--x", "1", "--y", "2", "--p", "2", "--format", "csv"}).code, 1);
}
