#pragma once

#include <span>
#include <vector>

namespace oligosim {

// Outcome of clearing one interval under the short-side rule.
struct ClearingResult {
  std::vector<double> sales;   // quantity each firm actually sells
  std::vector<double> excess;  // unsold quantity, freely disposed
  std::vector<double> shares;  // market share, proportional to production
  double total_excess = 0.0;
  double unmet_demand = 0.0;
};

// Short-side clearing: realized trade is min(supply, demand). Under excess
// supply every firm is rationed proportionally to its output, which is the
// only per-firm rule consistent with output-proportional shares summing to
// the demand actually served. Unsold output vanishes (free disposal). With
// zero aggregate supply, shares default to 1/N.
// Throws std::domain_error on negative inputs, std::invalid_argument if
// productions is empty.
ClearingResult clear_market(std::span<const double> productions,
                            double demand);

}  // namespace oligosim
