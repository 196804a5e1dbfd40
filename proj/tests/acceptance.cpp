// One PASS/FAIL line per acceptance criterion, followed by the evidence.
// Usage: acceptance [--only N] [--samples N] [--seed S]

#include <cstdlib>
#include <iostream>
#include <string>

#include "frontal/verify.hpp"

int main(int argc, char** argv) {
  frontal::VerifyOptions opt;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    const bool has_value = i + 1 < argc;
    if (a == "--only" && has_value) {
      only = std::atoi(argv[++i]);
    } else if (a == "--samples" && has_value) {
      opt.samples = std::atoi(argv[++i]);
    } else if (a == "--seed" && has_value) {
      opt.seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: acceptance [--only N] [--samples N] [--seed S]\n";
      return 2;
    }
  }
  if (only < 0 || only > frontal::kCriterionCount || opt.samples < 1) {
    std::cerr << "bad arguments\n";
    return 2;
  }
  bool all = true;
  for (int id = 1; id <= frontal::kCriterionCount; ++id) {
    if (only != 0 && id != only) continue;
    const frontal::CriterionResult r = frontal::run_criterion(id, opt);
    std::cout << frontal::format_result(r) << "\n";
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
