#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

#ifndef CLI_BIN
#error "CLI_BIN must point at the command line binary"
#endif

struct RunResult {
  int code;
  std::string out;
};

std::string work_dir() {
  static std::string dir = [] {
    std::string d = "/tmp/varembed_cli_test_" + std::to_string(getpid());
    if (std::system(("mkdir -p " + d).c_str()) != 0) d = "/tmp";
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  const std::string out_path = work_dir() + "/stdout.txt";
  const std::string cmd =
      std::string(CLI_BIN) + " " + args + " > " + out_path + " 2>&1";
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("pell subcommand prints canonical solutions") {
  RunResult r = run("pell --t \"t^2 + 2\" --n 2 --z");
  CHECK(r.code == 0);
  CHECK(r.out == "X = 2*t^4 + 8*t^2 + 7\nY = 2*t^2 + 4\nZ = 2\n");
  // negative indices work
  CHECK(run("pell --t \"t\" --n -2").out == "X = 2*t^2 - 1\nY = -2*t\n");
}

TEST_CASE("exit codes distinguish parse and semantic failures") {
  CHECK(run("pell --t \"t^2 +\" --n 1").code == 2);
  CHECK(run("pell --t \"5\" --n 1 --z").code == 3);  // constant T has no Z
  CHECK(run("witness real --dioph \"x1^2 - x2^2 - 3\" --vars x1,x2 "
            "--solution 2,2").code == 3);
  CHECK(run("witness real --dioph \"x1^2 - x2^2 - 3\" --vars x1,x2 "
            "--solution 2,oops").code == 2);
  CHECK(run("reduce complex --dioph \"x1 - x2\" --vars x1,x2").code == 3);
  CHECK(run("divfam --n 3 --constants 1,2").code == 2);
  CHECK(run("bogus-subcommand").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("divfam subcommand emits the family document") {
  RunResult r = run("divfam --n 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"constants\"") != std::string::npos);
  CHECK(r.out.find("x1*x2 + 1") != std::string::npos);
  // explicit constants matching 3k give identical output
  CHECK(run("divfam --n 2 --constants 3,6").out == r.out);
}

TEST_CASE("end-to-end real pipeline via files") {
  const std::string dir = work_dir();
  const std::string variety = dir + "/variety.json";
  const std::string witness = dir + "/witness.json";
  const std::string report1 = dir + "/report1.json";
  const std::string report2 = dir + "/report2.json";

  CHECK(run("reduce real --dioph \"x1^2 - x2^2 - 3\" --vars x1,x2 --out " +
            variety).code == 0);
  CHECK(run("witness real --dioph \"x1^2 - x2^2 - 3\" --vars x1,x2 "
            "--solution 2,1 --out " + witness).code == 0);

  RunResult v1 = run("verify --variety " + variety + " --witness " + witness +
                     " --out " + report1);
  CHECK(v1.code == 0);
  CHECK(v1.out == "PASS\n");
  RunResult v2 = run("verify --variety " + variety + " --witness " + witness +
                     " --out " + report2);
  CHECK(v2.code == 0);
  // byte-identical reports across runs
  std::string doc = slurp(report1);
  CHECK(doc == slurp(report2));
  CHECK(doc.find("\"verdict\": \"pass\"") != std::string::npos);

  // a tampered witness fails verification with exit code 1
  std::string broken = slurp(witness);
  auto pos = broken.find("\"2*t^2 + 4\"");
  REQUIRE(pos != std::string::npos);
  broken.replace(pos, 11, "\"2*t^2 + 5\"");
  const std::string bad_witness = dir + "/witness_bad.json";
  std::ofstream(bad_witness) << broken;
  RunResult v3 = run("verify --variety " + variety + " --witness " + bad_witness);
  CHECK(v3.code == 1);
  CHECK(v3.out == "FAIL\n");

  // a mangled witness document is a parse failure
  const std::string junk = dir + "/witness_junk.json";
  std::ofstream(junk) << "{ not json";
  CHECK(run("verify --variety " + variety + " --witness " + junk).code == 2);
  // a missing file is an I/O failure
  CHECK(run("verify --variety " + variety + " --witness " + dir +
            "/nope.json").code == 3);
}
