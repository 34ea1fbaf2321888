#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hopfchain {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0 when the criterion has no runtime bound
};

struct ProbeResult {
  int exit_code = 0;
  std::string output;  // stdout and stderr together
};

// Runs the command-line front end with the given arguments.
using CliProbe = std::function<ProbeResult(const std::vector<std::string>& args)>;

constexpr int kCriterionCount = 12;

CriterionResult run_criterion(int id, const CliProbe& cli);
std::vector<CriterionResult> run_acceptance(const CliProbe& cli);
std::string format_result(const CriterionResult& r);

}  // namespace hopfchain
