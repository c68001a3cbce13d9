#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  std::string out_path = "cli_test_stdout.tmp";
  std::string cmd = std::string(CELLULE_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  int rc = std::system(cmd.c_str());
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(out_path.c_str());
#ifdef WEXITSTATUS
  if (WIFEXITED(rc)) rc = WEXITSTATUS(rc);
#endif
  return {rc, ss.str()};
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  json j;
  in >> j;
  return j;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("mult reports structure constants with the bound") {
  auto r = run_cli("--type A~1 --weights s1=2,s2=1 --json mult_report.json mult \"s1\" \"s1\"");
  CHECK(r.exit_code == 0);
  json j = read_json("mult_report.json");
  std::remove("mult_report.json");
  CHECK(j["command"] == "mult");
  CHECK(j["c_xy"] == 2);
  CHECK(j["nu_tilde"] == 2);
  REQUIRE(j["results"].size() == 2);
  CHECK(j["results"][0]["word"] == "");
  CHECK(j["results"][0]["f"]["str"] == "1");
  CHECK(j["results"][1]["word"] == "s1");
  CHECK(j["results"][1]["f"]["str"] == "v^2 - v^-2");
  CHECK(j["results"][1]["f"]["coeffs"]["2"] == 1);
  CHECK(j["results"][1]["f"]["coeffs"]["-2"] == -1);
  CHECK(j["violations"].empty());
}

TEST_CASE("mult with an empty factor") {
  auto r = run_cli("--type A~1 --json mult_e.json mult \"\" \"s1\"");
  CHECK(r.exit_code == 0);
  json j = read_json("mult_e.json");
  std::remove("mult_e.json");
  CHECK(j["c_xy"] == 0);
  REQUIRE(j["results"].size() == 1);
  CHECK(j["results"][0]["word"] == "s1");
  CHECK(j["results"][0]["f"]["str"] == "1");
}

TEST_CASE("klpoly") {
  auto r = run_cli("--type A~1 --weights s1=2,s2=1 --json kl.json klpoly \"\" \"s1\"");
  CHECK(r.exit_code == 0);
  json j = read_json("kl.json");
  std::remove("kl.json");
  CHECK(j["results"][0]["p"]["str"] == "v^-2");
}

TEST_CASE("verify count: exit code contract") {
  auto ok = run_cli("--type A~1 --weights s1=2,s2=1 verify count --max-length 8");
  CHECK(ok.exit_code == 0);
  // a bound too small to stabilize yields a nonzero exit
  auto unstable = run_cli("--type G~2 verify count --max-length 2");
  CHECK(unstable.exit_code == 1);
}

TEST_CASE("c0 decomposition") {
  auto r = run_cli("--type A~1 --weights s1=2,s2=1 --json c0.json c0 --max-length 6 --decompose");
  CHECK(r.exit_code == 0);
  json j = read_json("c0.json");
  std::remove("c0.json");
  CHECK(j["results"].size() == 2);  // N_{0,e} and N_{0,s2}
}

TEST_CASE("plot writes SVG for rank 2 and rejects other ranks") {
  auto r = run_cli("--type A~2 plot --out plot_test.svg --window 1.5");
  CHECK(r.exit_code == 0);
  std::ifstream in("plot_test.svg");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string svg = ss.str();
  std::remove("plot_test.svg");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(svg.find("special-orbit-") != std::string::npos);

  auto bad = run_cli("--type B~3 plot --out nope.svg");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("config errors exit with 2") {
  CHECK(run_cli("--type Z~9 verify count").exit_code == 2);
  CHECK(run_cli("--type A~2 --weights s1=2,s2=1,s3=1 verify count").exit_code == 2);
  CHECK(run_cli("--type A~1 mult \"s7\" \"s1\"").exit_code == 2);
}

TEST_CASE("reports are deterministic outside the timing field") {
  auto r1 = run_cli("--type C~2 --weights s1=2 --json det1.json verify count --max-length 8");
  auto r2 = run_cli("--type C~2 --weights s1=2 --json det2.json verify count --max-length 8");
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  json a = read_json("det1.json");
  json b = read_json("det2.json");
  std::remove("det1.json");
  std::remove("det2.json");
  a.erase("timing_ms");
  b.erase("timing_ms");
  CHECK(a == b);
}

TEST_SUITE_END();
