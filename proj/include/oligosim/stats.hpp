#pragma once

#include <span>

namespace oligosim {

double mean(std::span<const double> values);

// Median of a copy of the values; even counts average the two middle
// elements.
double median(std::span<const double> values);

// Sample standard deviation (n - 1 denominator); 0 for fewer than two
// values.
double sample_stddev(std::span<const double> values);

// Fraction of values strictly greater than zero.
double fraction_positive(std::span<const double> values);

}  // namespace oligosim
