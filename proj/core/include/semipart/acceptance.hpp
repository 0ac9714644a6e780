#pragma once

#include <string>
#include <vector>

namespace semipart {

/// One verification criterion's outcome.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
  double seconds = 0;
};

struct AcceptanceOptions {
  unsigned threads = 1;
};

inline constexpr int kCriterionCount = 11;

/// Runs one criterion (1..11).
CriterionResult run_criterion(int id, const AcceptanceOptions& options);

/// Runs the listed criteria (all of them when ids is empty).
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::vector<int>& ids = {});

/// Markdown summary of a run.
std::string acceptance_markdown(const std::vector<CriterionResult>& results);

}  // namespace semipart
