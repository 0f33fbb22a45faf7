#include "hcdirac/cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

using namespace hcdirac;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "hcdirac");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "hcdirac_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config text round-trips") {
  RunConfig c;
  c.command = "verify";
  c.ineq = "example_4.2";
  c.tau = 0.1;
  c.alpha = 1.0 / 3.0;
  c.n = 2;
  c.points = 64;
  c.box = 2.75;
  c.r_min = 0.9;
  c.r_max = 1.7;
  c.trials = 3;
  c.seed = 18446744073709551557ULL;
  c.slack = 0.015;
  c.massive = true;
  c.resolution_check = false;
  c.phase = "zero";
  c.sample_lo = 0.05;
  c.sample_hi = 20;
  c.samples_per_decade = 64;
  c.sigma = 0.35;
  c.form = "corrected";
  c.json_out = "/tmp/a b.json";
  c.csv_out = "/tmp/t.csv";
  const fs::path file = scratch("roundtrip.cfg");
  std::ofstream(file) << format_config(c);
  const std::string path = file.string();
  const char* argv[] = {"hcdirac", "--config", path.c_str()};
  std::ostringstream out;
  const auto parsed = parse_args(3, argv, out);
  REQUIRE(parsed);
  CHECK(*parsed == c);
  CHECK(format_config(*parsed) == format_config(c));
}

TEST_CASE("flags override config values") {
  const fs::path file = scratch("override.cfg");
  std::ofstream(file) << "command = thm5-constant\ntau = 0.7\nn = 2\n";
  const std::string path = file.string();
  const char* argv[] = {"hcdirac", "--config", path.c_str(), "--tau", "0.5"};
  std::ostringstream out;
  const auto parsed = parse_args(5, argv, out);
  REQUIRE(parsed);
  CHECK(*parsed->tau == 0.5);
  CHECK(*parsed->n == 2);
}

TEST_CASE("exit codes") {
  const std::string j = scratch("t5.json").string(), c = scratch("t5.csv").string();
  auto r = invoke({"thm5-constant", "--tau", "0.5", "--n", "3", "--json-out", j, "--csv-out", c});
  CHECK(r.code == 0);
  CHECK(r.out.find("c = 0.0625") != std::string::npos);

  r = invoke({"verify", "--ineq", "thm5.1", "--tau", "-1", "--n", "3", "--json-out", j, "--csv-out", c});
  CHECK(r.code == 2);
  CHECK(r.err.find("tau != 2k - n") != std::string::npos);
  CHECK(r.err.find("2*1 - 3") != std::string::npos);

  CHECK(invoke({"verify", "--ineq", "nope", "--json-out", j, "--csv-out", c}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"verify", "--tau", "abc"}).code == 2);
  CHECK(invoke({"verify", "--ineq", "hardy_4.3", "--json-out", "/nonexistent/dir/x.json"}).code == 2);

  r = invoke({"check-weights", "--ineq", "thm5.1", "--tau", "0.5", "--json-out", j, "--csv-out", c});
  CHECK(r.code == 1);
  r = invoke({"check-weights", "--ineq", "example_4.1", "--tau", "1", "--json-out", j, "--csv-out", c});
  CHECK(r.code == 0);
  CHECK(slurp(c).rfind("r,M,M0,log_b_over_a\n", 0) == 0);
}

TEST_CASE("verify writes reports and is deterministic") {
  const fs::path j1 = scratch("v1.json"), j2 = scratch("v2.json"), csv = scratch("v.csv"), field = scratch("f.bin");
  const std::vector<std::string> base{"verify", "--ineq", "treve_4.6", "--tau", "0.5", "--n", "2",
                                      "--trials", "3", "--csv-out", csv.string()};
  auto a = base;
  a.insert(a.end(), {"--json-out", j1.string(), "--field-out", field.string()});
  auto b = base;
  b.insert(b.end(), {"--json-out", j2.string()});
  const auto ra = invoke(a);
  const auto rb = invoke(b);
  CHECK(ra.code == 0);
  CHECK(rb.code == 0);
  CHECK(ra.out.find("treve_4.6 H0 paper_constant=1 observed_min=") == 0);
  CHECK(slurp(j1) == slurp(j2));
  CHECK(slurp(j1).find("\"paper_constant\": 1.0") != std::string::npos);
  CHECK(slurp(csv).rfind("trial,seed,quotient\n", 0) == 0);
  CHECK(fs::file_size(field) > 0);
}

TEST_CASE("output directory comes from the environment") {
  const fs::path dir = scratch("outdir");
  fs::create_directories(dir);
  setenv("HCDIRAC_OUTPUT_DIR", dir.c_str(), 1);
  CHECK(default_output_dir() == dir.string());
  CHECK(invoke({"thm5-constant", "--tau", "0.7", "--n", "2"}).code == 0);
  CHECK(fs::exists(dir / "thm5-constant.json"));
  unsetenv("HCDIRAC_OUTPUT_DIR");
  CHECK(default_output_dir() == ".");
}

TEST_CASE("help exits cleanly") {
  const auto r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("--ineq") != std::string::npos);
}
