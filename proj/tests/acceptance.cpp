#include "hopfchain/verify.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <iostream>

using namespace hopfchain;

namespace {

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char ch : s) q += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return q + "'";
}

// Runs the installed front end as a separate process.
ProbeResult run_cli(const std::vector<std::string>& args) {
  std::string cmd = quote(HOPFCHAIN_CLI_PATH);
  for (const std::string& a : args) cmd += " " + quote(a);
  cmd += " 2>&1";
  ProbeResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, "popen failed"};
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.output.append(buf.data(), got);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

int main() {
  int failed = 0;
  for (int id = 1; id <= kCriterionCount; ++id) {
    CriterionResult r = run_criterion(id, run_cli);
    failed += !r.pass;
    std::cout << format_result(r) << std::endl;
  }
  std::cout << (kCriterionCount - failed) << "/" << kCriterionCount << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
