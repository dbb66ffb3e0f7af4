#include "oligosim/market.hpp"

#include <cstddef>
#include <stdexcept>

namespace oligosim {

ClearingResult clear_market(std::span<const double> productions,
                            double demand) {
  if (productions.empty()) {
    throw std::invalid_argument("market needs at least one firm");
  }
  if (demand < 0.0) {
    throw std::domain_error("demand must be >= 0");
  }
  double supply = 0.0;
  for (double y : productions) {
    if (y < 0.0) {
      throw std::domain_error("production must be >= 0");
    }
    supply += y;
  }

  const std::size_t n = productions.size();
  ClearingResult result;
  result.sales.resize(n);
  result.excess.resize(n);
  result.shares.resize(n);

  if (supply <= demand) {
    // Supply is the short side: everything sells.
    for (std::size_t i = 0; i < n; ++i) {
      result.sales[i] = productions[i];
      result.excess[i] = 0.0;
    }
    result.total_excess = 0.0;
    result.unmet_demand = demand - supply;
  } else {
    // Demand is the short side: proportional rationing.
    const double ration = demand / supply;
    for (std::size_t i = 0; i < n; ++i) {
      result.sales[i] = productions[i] * ration;
      result.excess[i] = productions[i] - result.sales[i];
    }
    result.total_excess = supply - demand;
    result.unmet_demand = 0.0;
  }

  if (supply > 0.0) {
    for (std::size_t i = 0; i < n; ++i) {
      result.shares[i] = productions[i] / supply;
    }
  } else {
    const double equal = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      result.shares[i] = equal;
    }
  }
  return result;
}

}  // namespace oligosim
