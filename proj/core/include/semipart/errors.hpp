#pragma once

#include <stdexcept>
#include <string>

namespace semipart {

/// A computation refused because it exceeds its resource or certification
/// budget (CLI exit code 3). `best_achieved` carries the bound that was
/// reachable within budget, when meaningful.
struct BudgetError : std::runtime_error {
  double best_achieved;
  explicit BudgetError(const std::string& what, double achieved = 0.0)
      : std::runtime_error(what), best_achieved(achieved) {}
};

}  // namespace semipart
