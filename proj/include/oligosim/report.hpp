#pragma once

#include <string>

#include "oligosim/engine.hpp"
#include "oligosim/experiments.hpp"

namespace oligosim {

// One row per interval. Columns: t,p1,p2, then cost_i,y_i,sales_i,excess_i,
// buffer_i for each firm i (1-based), then total_supply,total_excess,
// unmet_demand. Unix newlines, '.' decimal point, floats at 9 significant
// digits.
std::string render_run_csv(const RunResult& result);

// One row per grid cell. Columns: gamma_one,gamma_two,runs,mean,median,
// stddev,fraction_positive.
std::string render_sweep_csv(const SweepResult& result);

// Pretty-printed JSON with keys in a fixed order: the exact config used
// (so the run can be replayed), final buffers, global excess, the generator
// name, and the seed. Floats at 9 significant digits, integers exact.
std::string render_summary_json(const SimConfig& config,
                                const RunResult& result);

}  // namespace oligosim
