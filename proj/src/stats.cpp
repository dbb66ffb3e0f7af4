#include "oligosim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oligosim {

namespace {

void require_nonempty(std::span<const double> values) {
  if (values.empty()) {
    throw std::invalid_argument("statistic of empty sample");
  }
}

}  // namespace

double mean(std::span<const double> values) {
  require_nonempty(values);
  const double sum = std::accumulate(values.begin(), values.end(), 0.0);
  return sum / static_cast<double>(values.size());
}

double median(std::span<const double> values) {
  require_nonempty(values);
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  if (n % 2 == 1) {
    return sorted[n / 2];
  }
  return 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

double sample_stddev(std::span<const double> values) {
  require_nonempty(values);
  const std::size_t n = values.size();
  if (n < 2) {
    return 0.0;
  }
  const double m = mean(values);
  double ss = 0.0;
  for (double v : values) {
    ss += (v - m) * (v - m);
  }
  return std::sqrt(ss / static_cast<double>(n - 1));
}

double fraction_positive(std::span<const double> values) {
  require_nonempty(values);
  const auto positives =
      std::count_if(values.begin(), values.end(), [](double v) { return v > 0.0; });
  return static_cast<double>(positives) / static_cast<double>(values.size());
}

}  // namespace oligosim
