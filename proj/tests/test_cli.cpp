#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = heckelab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

TEST(Cli, HeckeVerifyExample) {
  auto r = run(split("hecke verify --type finite --rank 3 --cutoff 3"));
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = parse(r);
  EXPECT_EQ(j["tool_version"], heckelab::cli::kToolVersion);
  EXPECT_EQ(j["command"], "hecke verify");
  EXPECT_EQ(j["params"]["rank"], 3);
  EXPECT_TRUE(j["summary"]["pass"].get<bool>());
  ASSERT_TRUE(j["checks"].is_array());
  std::vector<std::string> ids;
  for (const auto& c : j["checks"]) {
    for (const char* key : {"id", "paper_ref", "pass", "data"}) EXPECT_TRUE(c.contains(key)) << key;
    ids.push_back(c["id"]);
  }
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
}

TEST(Cli, LiteralVariantFailsCommutator) {
  auto r = run(split("fq rep-check --variant paper-literal --N 32 --v 0.5 --t 0"));
  EXPECT_EQ(r.code, 1);
  auto j = parse(r);
  bool found = false;
  for (const auto& c : j["checks"]) {
    if (c["id"] == "commutator[t11,t22]") {
      found = true;
      EXPECT_FALSE(c["pass"].get<bool>());
      EXPECT_GT(c["data"]["residual"].get<double>(), 0.1);
      for (const char* key : {"variant", "t", "v", "N", "word", "relation_id", "residual", "excluded_band",
                              "coproduct_convention"}) {
        EXPECT_TRUE(c["data"].contains(key)) << key;
      }
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, CorrectedRepresentationPasses) {
  EXPECT_EQ(run(split("fq rep-check --N 32 --v 0.3 --t 0.25")).code, 0);
}

TEST(Cli, SpechtTableExample) {
  auto r = run(split("specht table --n 4 --l 2 --q-root"));
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = parse(r);
  int rows = 0;
  for (const auto& c : j["checks"]) {
    if (c["id"].get<std::string>().rfind("row", 0) != 0) continue;
    ++rows;
    EXPECT_TRUE(c["data"].contains("dim_S"));
    EXPECT_TRUE(c["data"]["dim_D"].contains("2"));
    EXPECT_TRUE(c["data"]["l_regular"].contains("2"));
  }
  EXPECT_EQ(rows, 5);
}

TEST(Cli, UsageErrors) {
  auto r = run(split("bogus"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run(split("specht dim --partition (2,1) --q 2 --v 0.5")).code, 2);
  EXPECT_EQ(run(split("hecke verify --type weird --rank 3 --cutoff 2")).code, 2);
  EXPECT_EQ(run(split("hecke verify --rank 3 --cutoff 2 --format xml")).code, 2);
}

TEST(Cli, DomainErrorsExitTwo) {
  EXPECT_EQ(run(split("specht dim --partition (1,2)")).code, 2);
  EXPECT_EQ(run(split("hecke mul --type affine --rank 2 --a T[s0] --b T[s1] --cutoff 1")).code, 2);
  EXPECT_EQ(run(split("fq rep-check --v 1.5")).code, 2);
  EXPECT_EQ(run(split("fq tensor --word 1,1 --m 2")).code, 2);
  EXPECT_EQ(run(split("coxeter word --type finite --rank 3 --window [1,1,2]")).code, 2);
}

TEST(Cli, HelpExitsZero) {
  auto r = run(split("--help"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Usage"), std::string::npos);
}

TEST(Cli, EverySubcommandHonorsCsv) {
  const std::vector<std::string> commands = {
      "coxeter word --type affine --rank 3 --word s0_s1",
      "coxeter enumerate --type finite --rank 3 --L 3",
      "hecke mul --type finite --rank 3 --a T[s1] --b T[s1]",
      "hecke verify --type affine --rank 2 --cutoff 3",
      "bernstein check --rank 2 --cutoff 6 --box 1",
      "specht table --n 3",
      "specht dim --partition (2,1)",
      "schur basis --n 2 --r 2",
      "schur duality --n 2 --r 2 --q 2.7",
      "schur dg-check --d 2",
      "fq normal-form --expr t22*t11",
      "fq rep-check --N 8",
      "fq commutant --N 8 --t 0.25",
      "fq equiv --N 8 --t1 0 --t2 0.5",
      "fq tensor --word 1 --m 2 --N 6"};
  for (const auto& cmd : commands) {
    auto args = split(cmd);
    for (auto& a : args) std::replace(a.begin(), a.end(), '_', ' ');
    args.push_back("--format");
    args.push_back("csv");
    auto r = run(args);
    EXPECT_EQ(r.code, 0) << cmd << "\n" << r.err << r.out;
    EXPECT_EQ(r.out.rfind("command,id,paper_ref,pass,data\n", 0), 0u) << cmd;
    EXPECT_GE(std::count(r.out.begin(), r.out.end(), '\n'), 2) << cmd;
  }
}

TEST(Cli, CsvQuotesEmbeddedSeparators) {
  heckelab::cli::Report rep;
  rep.command = "x";
  rep.checks.push_back({"a,b", "ref \"q\"", true, {{"k", 1}}});
  EXPECT_EQ(heckelab::cli::render_csv(rep),
            "command,id,paper_ref,pass,data\nx,\"a,b\",\"ref \"\"q\"\"\",true,\"{\"\"k\"\":1}\"\n");
}

TEST(Cli, ReportsAreByteIdentical) {
  for (const std::string cmd : {"fq equiv --N 8 --t1 0.1 --t2 0.1 --seed 7", "specht table --n 4 --l 3 --q-root",
                                "bernstein check --rank 2 --cutoff 6 --box 1"}) {
    auto a = run(split(cmd));
    auto b = run(split(cmd));
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}

TEST(Cli, ThreadCapDoesNotChangeOutput) {
  const auto args = split("specht table --n 4 --l 2 --l 3 --q-root");
  setenv("HECKELAB_THREADS", "1", 1);
  EXPECT_EQ(heckelab::cli::thread_cap(), 1u);
  auto a = run(args);
  setenv("HECKELAB_THREADS", "3", 1);
  EXPECT_EQ(heckelab::cli::thread_cap(), 3u);
  auto b = run(args);
  unsetenv("HECKELAB_THREADS");
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ParallelMapKeepsOrder) {
  setenv("HECKELAB_THREADS", "4", 1);
  auto v = heckelab::cli::parallel_map(50, [](std::size_t k) { return static_cast<int>(k * k); });
  unsetenv("HECKELAB_THREADS");
  ASSERT_EQ(v.size(), 50u);
  for (std::size_t k = 0; k < v.size(); ++k) EXPECT_EQ(v[k], static_cast<int>(k * k));
}

TEST(Cli, EquivalenceSemantics) {
  EXPECT_EQ(run(split("fq equiv --N 8 --t1 0 --t2 0.25")).code, 0);
  EXPECT_EQ(run(split("fq equiv --rep tau --t1 0 --t2 0.25")).code, 0);
  EXPECT_EQ(run(split("fq equiv --N 8 --t1 0.3 --t2 0.3")).code, 0);
}

TEST(Cli, AffineDualityIsReportedNotFailed) {
  auto r = run(split("schur duality --n 2 --r 2 --affine-cutoff 3"));
  EXPECT_EQ(r.code, 0);
  auto c = parse(r)["checks"][0];
  EXPECT_FALSE(c["data"]["conclusive"].get<bool>());
}

TEST(Cli, VParameterBridge) {
  auto r = run(split("schur duality --n 2 --r 2 --v 0.5"));
  EXPECT_EQ(r.code, 0);
  EXPECT_DOUBLE_EQ(parse(r)["params"]["q"].get<double>(), 4.0);
}
