#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Run the installed binary with the given arguments, capturing stdout.
// stderr is dropped so diagnostics from expected failures stay quiet.
RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + QZETA_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  r.exit_code = WEXITSTATUS(status);
  return r;
}

json parse(const RunResult& r) {
  json j = json::parse(r.out, nullptr, false);
  REQUIRE_FALSE(j.is_discarded());
  return j;
}

}  // namespace

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("zeta --help").exit_code == 0);
}

TEST_CASE("zeta eval emits the report envelope") {
  RunResult r = run_cli("zeta eval --s 3 --q 1/2");
  REQUIRE(r.exit_code == 0);
  json j = parse(r);
  CHECK(j.at("schema") == "qzeta-report/1");
  CHECK(j.at("command") == "zeta eval");
  CHECK(j.at("seed") == 20260823);
  CHECK(j.at("pass") == true);
  CHECK(j.at("config").at("precision") == 256);
  CHECK(j.at("config").at("s") == 3);
  CHECK(j.at("config").at("q") == "1/2");
  CHECK(j.at("results").at("approx") == "7.09928517889");
  std::string value = j.at("results").at("value");
  CHECK(value.find("+/-") != std::string::npos);
}

TEST_CASE("form verification passes on the smallest instance") {
  RunResult r = run_cli("form verify --A 4 --r 1 --n 0 --q 1/2");
  REQUIRE(r.exit_code == 0);
  json j = parse(r);
  CHECK(j.at("pass") == true);
  const json& cases = j.at("results").at("cases");
  REQUIRE(cases.size() == 1);
  CHECK(cases[0].at("n") == 0);
  CHECK(cases[0].at("contains_zero") == true);
  CHECK(cases[0].at("radius_ok") == true);
}

TEST_CASE("weakened denominator power is reported as a failure") {
  RunResult r = run_cli("denom verify --A 4 --r 1 --n-max 2 --d-power 2");
  CHECK(r.exit_code == 1);
  json j = parse(r);
  CHECK(j.at("pass") == false);
  CHECK(j.at("command") == "denom verify");
}

TEST_CASE("usage errors exit with the parse-error code") {
  CHECK(run_cli("nosuch").exit_code == 2);
  CHECK(run_cli("zeta eval --s 3 --q 7/0").exit_code == 2);
  CHECK(run_cli("zeta eval --q 1/2").exit_code == 2);
  CHECK(run_cli("zeta eval --s 3 --q 1/2 --precision 8").exit_code == 2);
}

TEST_CASE("identical invocations produce identical bytes") {
  RunResult a = run_cli("identity verify --andrews-count 12");
  RunResult b = run_cli("identity verify --andrews-count 12");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(a.out == b.out);
  json j = parse(a);
  CHECK(j.at("pass") == true);
  const json& andrews = j.at("results").at("andrews");
  REQUIRE(andrews.is_array());
  CHECK(andrews.size() >= 12);
  for (const json& inst : andrews) CHECK(inst.at("pass") == true);
  const json& closed = j.at("results").at("closed_forms");
  REQUIRE(closed.is_array());
  CHECK(closed.size() == 4);
  for (const json& c : closed) {
    CHECK(c.at("failures").empty());
    CHECK(c.at("instances").get<int>() >= 1);
  }
}

TEST_CASE("worker count is echoed but does not change results") {
  RunResult one = run_cli("--jobs 1 form verify --A 4 --r 1 --n 1 --q 1/2");
  RunResult two = run_cli("--jobs 2 form verify --A 4 --r 1 --n 1 --q 1/2");
  REQUIRE(one.exit_code == 0);
  REQUIRE(two.exit_code == 0);
  json ja = parse(one), jb = parse(two);
  CHECK(ja.at("config").at("jobs") == 1);
  CHECK(jb.at("config").at("jobs") == 2);
  CHECK(ja.at("results") == jb.at("results"));
}

TEST_CASE("environment sets the default precision") {
  RunResult r = run_cli("zeta eval --s 2 --q 1/3", "QZETA_PRECISION=128 ");
  REQUIRE(r.exit_code == 0);
  CHECK(parse(r).at("config").at("precision") == 128);

  RunResult flag =
      run_cli("--precision 192 zeta eval --s 2 --q 1/3", "QZETA_PRECISION=128 ");
  REQUIRE(flag.exit_code == 0);
  CHECK(parse(flag).at("config").at("precision") == 192);
}

TEST_CASE("seed option is recorded in the envelope") {
  RunResult r = run_cli("--seed 7 identity verify --andrews-count 5");
  REQUIRE(r.exit_code == 0);
  CHECK(parse(r).at("seed") == 7);
}

TEST_CASE("reports can be written to a file") {
  std::string path = "cli_report_out.json";
  RunResult r = run_cli("--output " + path + " zeta eval --s 3 --q 1/2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  json j = json::parse(ss.str(), nullptr, false);
  REQUIRE_FALSE(j.is_discarded());
  CHECK(j.at("schema") == "qzeta-report/1");
  std::remove(path.c_str());
}
