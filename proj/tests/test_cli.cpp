#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dpjet/cli.hpp"
#include "dpjet/hilbert.hpp"
#include "dpjet/serialize.hpp"

using namespace dpjet;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(NRange, Parse) {
  auto r = parse_n_range("2..7");
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->lo, 2);
  EXPECT_EQ(r->hi, 7);
  auto single = parse_n_range("4");
  ASSERT_TRUE(single.has_value());
  EXPECT_EQ(single->lo, 4);
  EXPECT_EQ(single->hi, 4);
  EXPECT_FALSE(parse_n_range("7..2").has_value());
  EXPECT_FALSE(parse_n_range("a..b").has_value());
  EXPECT_FALSE(parse_n_range("").has_value());
  EXPECT_FALSE(parse_n_range("-1..3").has_value());
}

TEST(Cli, HilbertTable) {
  CliRun r = run_cli({"hilbert", "--n", "3", "--method", "recursive", "--qmax", "5", "--tmax", "3"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, series_to_table(hilbert_recursive(3, 5, 3)));
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "t\\q 0 1 2 3 4 5");
}

TEST(Cli, HilbertJsonRoundTrips) {
  for (const char* m : {"recursive", "fermionic", "bosonic", "staircase", "linear_oracle"}) {
    CliRun r = run_cli({"hilbert", "--n", "4", "--method", m, "--qmax", "8", "--tmax", "4", "--format", "json"});
    ASSERT_EQ(r.code, kExitPass) << m;
    EXPECT_EQ(series_from_json(r.out), hilbert_recursive(4, 8, 4)) << m;
  }
}

TEST(Cli, HilbertCsv) {
  CliRun r = run_cli({"hilbert", "--n", "2", "--qmax", "2", "--tmax", "1", "--format", "csv"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "q_deg,t_deg,value\n0,0,1\n1,0,0\n2,0,0\n0,1,1\n1,1,1\n2,1,0\n");
}

TEST(Cli, HilbertVerify) {
  CliRun r = run_cli({"hilbert", "--verify", "--n-range", "0..6", "--qmax", "15", "--tmax", "6"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 7);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, GroebnerCensus) {
  CliRun r = run_cli({"groebner", "--n", "12", "--reduced", "--census"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "degree count predicted\n2 12 12\n3 5 5\n4 6 6\n5 4 4\nPASS\n");
  CliRun j = run_cli({"groebner", "--n", "12", "--census", "--format", "json"});
  auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["n"], 12);
  EXPECT_EQ(doc["census"][1]["count"], 5);
  EXPECT_EQ(doc["match"], true);
}

TEST(Cli, GroebnerJsonRoundTrips) {
  CliRun r = run_cli({"groebner", "--n", "6", "--format", "json"});
  EXPECT_EQ(r.code, kExitPass);
  GroebnerBasis b = basis_from_json(r.out);
  EXPECT_EQ(b.ambient_n, 6);
  EXPECT_TRUE(b.reduced);
  EXPECT_EQ(b.gens.size(), 8u);
  CliRun rec = run_cli({"groebner", "--n", "6", "--recursive", "--format", "json"});
  EXPECT_FALSE(basis_from_json(rec.out).reduced);
}

TEST(Cli, Betti) {
  CliRun r = run_cli({"betti", "--n", "4", "--graded", "--check"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  CliRun j = run_cli({"betti", "--n", "4", "--format", "json"});
  EXPECT_EQ(j.out, "{\"n\":4,\"ranks\":[\"1\",\"4\",\"4\",\"1\"]}\n");
}

TEST(Cli, SyzygyCheck) {
  CliRun r = run_cli({"syzygy-check", "--n", "3", "--max-q", "6", "--max-t", "4"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "qdeg tdeg kernel submodule");
  EXPECT_NE(r.out.find("1 3 1 1\n"), std::string::npos);
  CliRun d = run_cli({"syzygy-check", "--n", "4", "--max-q", "8", "--max-t", "5", "--drop-nu12"});
  EXPECT_EQ(d.code, kExitPass);
}

TEST(Cli, Limit) {
  CliRun r = run_cli({"limit", "--rr", "--gb-window", "8"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("from n=11"), std::string::npos);
}

TEST(Cli, VerifyPasses) {
  CliRun r = run_cli({"verify", "--n-range", "0..8"});
  EXPECT_EQ(r.code, kExitPass) << r.out << r.err;
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
}

TEST(ExitCodes, Mismatch) {
  // Weight 12 admits the extra generator x0*x6^2 of I_12.
  CliRun r = run_cli({"limit", "--gb-window", "12"});
  EXPECT_EQ(r.code, kExitMismatch);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(ExitCodes, Usage) {
  EXPECT_EQ(run_cli({"hilbert", "--n", "2", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"hilbert", "--n", "3", "--method", "foo"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"hilbert", "--n", "3", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--n-range", "5..1"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"groebner"}).code, kExitUsage);
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kExitPass);
}

TEST(ExitCodes, ResourceCap) {
  CliRun a = run_cli({"syzygy-check", "--n", "7"});
  EXPECT_EQ(a.code, kExitResource);
  EXPECT_NE(a.err.find("max n"), std::string::npos);
  CliRun b = run_cli({"--max-slice-dim", "1", "syzygy-check", "--n", "4"});
  EXPECT_EQ(b.code, kExitResource);
  EXPECT_NE(b.err.find("max slice dimension"), std::string::npos);
  CliRun c = run_cli({"--max-basis-size", "5", "groebner", "--n", "10"});
  EXPECT_EQ(c.code, kExitResource);
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args = {"hilbert", "--n", "7", "--qmax", "20", "--tmax", "8", "--format", "json"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
  std::vector<std::string> g = {"groebner", "--n", "9"};
  EXPECT_EQ(run_cli(g).out, run_cli(g).out);
}

TEST(Cli, OutFile) {
  auto path = std::filesystem::temp_directory_path() / "dpjet_cli_out_test.json";
  std::filesystem::remove(path);
  CliRun r = run_cli({"--out", path.string(), "hilbert", "--n", "3", "--qmax", "4", "--tmax", "2", "--format", "json"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(series_from_json(buf.str()), hilbert_recursive(3, 4, 2));
  std::filesystem::remove(path);
}

TEST(Config, EnvironmentOverridesCaps) {
  setenv("DPJET_MAX_SLICE_DIM", "123", 1);
  setenv("DPJET_MAX_BASIS_SIZE", "45", 1);
  RunConfig c = default_config();
  EXPECT_EQ(c.max_slice_dim, 123u);
  EXPECT_EQ(c.max_basis_size, 45u);
  setenv("DPJET_MAX_SLICE_DIM", "5", 1);
  CliRun r = run_cli({"syzygy-check", "--n", "4"});
  EXPECT_EQ(r.code, kExitResource);
  unsetenv("DPJET_MAX_SLICE_DIM");
  unsetenv("DPJET_MAX_BASIS_SIZE");
  RunConfig d = default_config();
  EXPECT_EQ(d.max_slice_dim, 50000u);
  EXPECT_EQ(d.max_basis_size, 20000u);
}
