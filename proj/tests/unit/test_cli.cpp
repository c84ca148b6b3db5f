// Contract tests against the installed command-line binary: exit codes,
// output determinism, and the documented flag surface. The binary path
// arrives through the TPRABI_BIN environment variable set by the test
// harness.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string binary() {
  const char* path = std::getenv("TPRABI_BIN");
  REQUIRE_MESSAGE(path != nullptr, "TPRABI_BIN must point at the CLI binary");
  return path;
}

int run(const std::string& args) {
  const std::string cmd = binary() + " " + args + " >/dev/null 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string temp_path(const std::string& tag) {
  return std::string("/tmp/tprabi_cli_") + tag + "_" +
         std::to_string(::getpid()) + ".csv";
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help exits cleanly") { CHECK(run("--help") == 0); }

TEST_CASE("usage errors exit with 2") {
  CHECK(run("") == 2);
  CHECK(run("alpha-scan") == 2);                          // missing range
  CHECK(run("alpha-scan --lambda-range bogus") == 2);     // malformed range
  CHECK(run("alpha-scan --lambda-range -0.1:0.1:3") == 2);  // grid through 0
  CHECK(run("solve --lambda 0") == 2);                    // singular coupling
  CHECK(run("solve --branch 7") == 2);
  CHECK(run("verify --only no-such-check") == 2);
}

TEST_CASE("alpha scan writes the expected table") {
  const std::string out = temp_path("scan");
  CHECK(run("alpha-scan --lambda-range 0.05:1.0:12 --out " + out) == 0);
  const std::string body = slurp(out);
  CHECK(body.find("Lambda,re_alpha1") == 0);
  int lines = 0;
  for (char ch : body)
    if (ch == '\n') ++lines;
  CHECK(lines == 13);  // header + 12 rows
  std::remove(out.c_str());
}

TEST_CASE("byte-identical output for any worker count") {
  const std::string out1 = temp_path("t1");
  const std::string out4 = temp_path("t4");
  CHECK(run("alpha-scan --lambda-range 0.05:1.2:40 --threads 1 --out " +
            out1) == 0);
  CHECK(run("alpha-scan --lambda-range 0.05:1.2:40 --threads 4 --out " +
            out4) == 0);
  CHECK(slurp(out1) == slurp(out4));
  std::remove(out1.c_str());
  std::remove(out4.c_str());
}

TEST_CASE("solve emits candidate rows") {
  const std::string out = temp_path("solve");
  CHECK(run("solve --n 1 --lambda 0.3 --epsilon 0.2 --no-oracle --out " +
            out) == 0);
  const std::string body = slurp(out);
  CHECK(body.find("re_z1") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("oracle verdict for the analytic point") {
  const std::string out = temp_path("oracle");
  CHECK(run("oracle --lambda 0 --delta 0.6 --epsilon 0.25 --energy 0.65 "
            "--out " +
            out) == 0);
  const std::string body = slurp(out);
  CHECK(body.find("matched") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("verify exits 0 on a passing check and 1 on an injected fault") {
  CHECK(run("verify --only identities") == 0);
  CHECK(run("verify --only n0-exactness") == 0);
  CHECK(run("verify --only n0-exactness --inject-fault 1e-3") == 1);
}

}  // TEST_SUITE
