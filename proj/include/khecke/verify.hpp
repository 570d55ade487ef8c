#pragma once

#include <functional>
#include <string>
#include <vector>

namespace khecke {

struct CheckItem {
  std::string name;
  bool ok = false;
  bool known_conflict = false;  // the listed value disagrees with a verified computation
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<CheckItem> items;
  double seconds = 0;
  double limit_seconds = 0;

  bool within_time() const { return seconds <= limit_seconds; }
  bool pass() const;
  /// Every failing item is a known conflict and the time limit held.
  bool acceptable() const;
};

using Progress = std::function<void(const std::string&)>;

/// Number of acceptance criteria.
constexpr int criterion_count = 11;

CriterionResult run_criterion(int id, const Progress& progress = {});
std::vector<CriterionResult> run_all_criteria(const Progress& progress = {});

/// "PASS  3 rewriting (0.12 s, limit 5 s)" plus indented item lines.
std::string format_result(const CriterionResult& r, bool verbose);

}  // namespace khecke
