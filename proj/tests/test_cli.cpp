#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char ch : s) q += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return q + "'";
}

// stdout only unless merge is set
Run run(const std::string& args, bool merge = false, const std::string& env = "") {
  std::string cmd = env + " " + quote(HOPFCHAIN_CLI_PATH) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string strip_header(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, body;
  while (std::getline(in, line))
    if (line.rfind("#", 0) != 0) body += line + "\n";
  return body;
}

}  // namespace

TEST_CASE("rock matrix as csv") {
  Run r = run("matrix --instance rock --n 3 --a 2 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# hopfchain ", 0) == 0);
  CHECK(r.out.find("# config {") != std::string::npos);
  CHECK(strip_header(r.out) ==
        "state,1.1.1,2.1,3\n"
        "1.1.1,1,0,0\n"
        "2.1,1/2,1/2,0\n"
        "3,0,3/4,1/4\n");
}

TEST_CASE("json carries version and config") {
  Run r = run("matrix --instance rock --n 2 --a 2 --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("version"));
  CHECK(j["config"]["n"] == 2);
  CHECK(j["config"]["instance"] == "rock");
  CHECK(j["result"]["rows"][1][0] == "1/2");

  Run e = run("eigen --instance rock --n 4 --side both --check --format json");
  REQUIRE(e.code == 0);
  CHECK(nlohmann::json::parse(e.out).contains("result"));
}

TEST_CASE("exit codes") {
  Run q = run("matrix --instance quotient-sym --n 2 --a 2", true);
  CHECK(q.code == 3);
  CHECK(q.out.find("e2") != std::string::npos);
  CHECK(run("matrix --instance nonsense --n 3").code == 2);
  CHECK(run("matrix --instance rock --n 3 --bogus").code == 2);
  CHECK(run("matrix --instance rock").code == 2);
  CHECK(run("matrix --instance graph --n 9 --a 2").code == 4);
  CHECK(run("--help").code == 0);
}

TEST_CASE("simulation is reproducible from the seed") {
  std::string args = "simulate --instance deck --nu 1,1,1,1 --n 4 --a 2 --seed 17 --steps 5 --runs 20";
  Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("simulate --instance rock --n 4 --a 2 --steps 3").code == 2);
}

TEST_CASE("output directory from the environment") {
  auto dir = std::filesystem::temp_directory_path() / "hopfchain_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  Run r = run("matrix --instance rock --n 3 --a 2", false, "HOPFCHAIN_OUT_DIR=" + quote(dir.string()));
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    ++files;
    std::ifstream f(entry.path());
    std::stringstream s;
    s << f.rdbuf();
    CHECK(strip_header(s.str()).rfind("state,1.1.1,2.1,3\n", 0) == 0);
  }
  CHECK(files == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify subcommand") {
  Run r = run("verify --criterion 1");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS", 0) == 0);
}
