#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("DBEXT_CLI");
  REQUIRE_MESSAGE(p != nullptr, "DBEXT_CLI must point at the dbext binary");
  return p;
}

RunResult shell(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

RunResult run(const std::string& args) { return shell(cli_path() + " " + args); }

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("generate") {
  const auto r = run("generate --k 2 --n 3");
  CHECK(r.exit_code == 0);
  CHECK(strip(r.out).size() == 8);

  CHECK(strip(run("generate --k 2 --n 1").out).size() == 2);
  CHECK(run("generate --k 40 --n 6").exit_code == 2);  // size cap
}

TEST_CASE("extend and verify round trip") {
  const auto ext = run("extend --seq 11000101 --k 2 --n 3");
  REQUIRE(ext.exit_code == 0);
  const std::string w = strip(ext.out);
  CHECK(w.size() == 27);

  CHECK(run("verify --seq " + w + " --k 2 --n 3 --input 11000101").exit_code == 0);
  CHECK(run("verify --seq " + w + " --k 3 --n 3").exit_code == 0);  // order-only over {0,1,2}
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify --seq 0011 --k 2 --n 2").exit_code == 0);
  CHECK(run("verify --seq 001122012 --k 2 --n 2 --input 0110").exit_code == 1);
  CHECK(run("verify --seq @@ --k 2 --n 2").exit_code == 2);
  CHECK(run("badcommand").exit_code == 2);
}

TEST_CASE("extend precondition and report") {
  CHECK(run("extend --seq 0101 --k 2 --n 2").exit_code == 3);

  const std::string path = "/tmp/dbext_test_report.json";
  const auto r = run("extend --seq 0011 --k 2 --n 2 --report " + path);
  REQUIRE(r.exit_code == 0);
  const std::string report = slurp(path);
  for (const char* field : {"\"k\"", "\"n\"", "\"start\"", "\"input\"", "\"output\"",
                            "\"embedding\"", "\"insertions\"", "\"matching\"", "\"window_bound\"",
                            "\"checks\"", "\"de_bruijn\"", "\"subsequence\"", "\"window\"",
                            "\"petal_len\"", "\"edge_index\"", "\"anchor\"", "\"vertex\""}) {
    CHECK_MESSAGE(report.find(field) != std::string::npos, field);
  }
  std::remove(path.c_str());
}

TEST_CASE("stdin input") {
  const auto r = shell("echo 0011 | " + cli_path() + " extend --seq - --k 2 --n 2");
  CHECK(r.exit_code == 0);
  CHECK(strip(r.out).size() == 9);
}

TEST_CASE("inspect") {
  const auto sections = run("inspect sections --seq 11000101 --k 2 --n 3 --start 11");
  CHECK(sections.exit_code == 0);
  CHECK(sections.out == "section 0: 10 00\n"
                        "section 1: 00 01\n"
                        "section 2: 10 01\n"
                        "section 3: 11 11\n");

  const auto tree = run("inspect petals-tree --k 2 --n 3");
  CHECK(tree.exit_code == 0);
  std::size_t nodes = 0, depth1 = 0;
  std::istringstream lines(tree.out);
  for (std::string line; std::getline(lines, line);) {
    ++nodes;
    depth1 += !line.empty() && line[0] == '[';
  }
  CHECK(nodes == 7);
  CHECK(depth1 == 4);

  const auto matching = run("inspect matching --seq 11000101 --k 2 --n 3");
  CHECK(matching.exit_code == 0);
  CHECK(matching.out.find("section 0: vertex") != std::string::npos);

  CHECK(run("inspect nonsense --k 2 --n 3").exit_code == 2);
}

TEST_CASE("size cap override via environment") {
  CHECK(run("generate --k 2 --n 12").exit_code == 0);
  const auto capped = shell("DEBRUIJN_SIZE_CAP=16 " + cli_path() + " generate --k 2 --n 12");
  CHECK(capped.exit_code == 2);
}
