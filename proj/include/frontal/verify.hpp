#pragma once

// Oracle suites behind `frontal verify` and the acceptance binary. Each
// criterion is checked at its stated tolerance; where a printed formula
// fails, the detail lines show the expression the jets reproduce.

#include <cstdint>
#include <string>
#include <vector>

namespace frontal {

struct VerifyOptions {
  int samples = 100;
  std::uint64_t seed = 20240601;
  int order = 8;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const VerifyOptions& opt);
std::vector<CriterionResult> run_all(const VerifyOptions& opt);

/// "PASS  3  title" plus indented detail lines.
std::string format_result(const CriterionResult& r, bool with_details = true);

}  // namespace frontal
