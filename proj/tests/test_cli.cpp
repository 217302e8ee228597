#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef ORTHO8_CLI_PATH
#error "ORTHO8_CLI_PATH must point at the built CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ORTHO8_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/ortho8_cli_test_") + name;
}

}  // namespace

TEST_CASE("check subcommand: pass, skip, rejection, usage") {
  auto r = run_cli("check C2.case1-orders --q 5 --a 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("pass") != std::string::npos);
  CHECK(r.out.find("62") != std::string::npos);

  // rejected parameters exit nonzero with a structured line
  r = run_cli("check C5.traces --q 5 --a 2");  // a = 2 is excluded for odd p
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("rejected") != std::string::npos);

  r = run_cli("check no.such.check --q 5 --a 1");
  CHECK(r.exit_code == 64);

  r = run_cli("check C5.traces --q 6 --a 1");  // not a prime power
  CHECK(r.exit_code == 64);

  // ambiguous family needs --family
  r = run_cli("check spin.burnside --q 5 --a 1");
  CHECK(r.exit_code == 64);
  r = run_cli("check spin.burnside --q 5 --a 1 --family minus-odd");
  CHECK(r.exit_code == 0);
}

TEST_CASE("primes subcommand") {
  auto r = run_cli("primes minus 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("{2, 3, 5, 7, 17}") != std::string::npos);
  r = run_cli("primes sideways 2");
  CHECK(r.exit_code == 64);
}

TEST_CASE("pair subcommand prints matrices and evidence") {
  auto r = run_cli("pair minus-2 --q 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("pair.invariants") != std::string::npos);
  CHECK(r.out.find("x = ") != std::string::npos);
  CHECK(r.out.find("sign = minus") != std::string::npos);

  r = run_cli("pair plus-odd --q 3 --a 1");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("rejected") != std::string::npos);
}

TEST_CASE("triality subcommand matches all printed images") {
  for (const char* args : {"triality --q 4 --a 2", "triality --q 5 --a 1"}) {
    auto r = run_cli(args);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("word_x = ") != std::string::npos);
    CHECK(r.out.find("DIFFERS") == std::string::npos);
    CHECK(r.out.find("x_{-1,4}") != std::string::npos);  // the documented flag
  }
}

TEST_CASE("sweep: deterministic JSON across worker counts, exit code semantics") {
  std::string out1 = temp_path("r1.json"), out2 = temp_path("r2.json");
  std::string base = "sweep --q-even-max 4 --q-odd-max 5 --checks 'pair.*' --no-symbolic";
  auto r1 = run_cli(base + " --jobs 1 --output " + out1);
  auto r2 = run_cli(base + " --jobs 5 --output " + out2);
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);

  std::ifstream f1(out1), f2(out2);
  nlohmann::json j1 = nlohmann::json::parse(f1);
  nlohmann::json j2 = nlohmann::json::parse(f2);
  // byte-identical result arrays
  CHECK(j1["results"].dump() == j2["results"].dump());
  CHECK(j1["summary"] == j2["summary"]);
  CHECK(j1["meta"]["version"] == "1");
  CHECK(j1["summary"]["fail"] == 0);
  CHECK(j1["results"].size() > 0);
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("sweep config file with flag overrides") {
  std::string cfg = temp_path("sweep.cfg");
  {
    std::ofstream out(cfg);
    out << "# desk-scale sweep\n";
    out << "families = minus-odd\n";
    out << "q-odd-max = 5\n";
    out << "q-even-max = 2\n";
    out << "checks = charxy.*\n";
    out << "format = text\n";
    out << "symbolic = 0\n";
  }
  auto r = run_cli("sweep --config " + cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("charxy.poly") != std::string::npos);
  CHECK(r.out.find("summary:") != std::string::npos);
  // flags override the file: restrict to a check that does not exist there
  auto r2 = run_cli("sweep --config " + cfg + " --checks 'q2.*' --q-even-max 2 --families minus-2");
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.find("q2.primes") != std::string::npos);
  std::remove(cfg.c_str());
}

TEST_CASE("sampling requires a seed") {
  auto r = run_cli("sweep --a-policy sample --samples 2");
  CHECK(r.exit_code == 64);
}

TEST_CASE("usage errors get a distinct exit code") {
  CHECK(run_cli("").exit_code == 64);
  CHECK(run_cli("frobnicate").exit_code == 64);
  CHECK(run_cli("check").exit_code == 64);
}
