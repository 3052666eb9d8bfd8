#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace lcsparse::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

struct Options {
  std::uint64_t seed = 20140115;
  /// Run only these criteria (1-based ids); empty means all.
  std::vector<int> only;
};

/// Runs the acceptance criteria at full size. Every criterion is exact and
/// also fails when it exceeds its time budget. When progress is non-null one
/// line per criterion is written as soon as it finishes.
std::vector<CriterionResult> run(const Options& options = {}, std::ostream* progress = nullptr);

std::string format(const CriterionResult& r);

}  // namespace lcsparse::acceptance
