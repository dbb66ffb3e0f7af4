#pragma once

#include <string>

#include "oligosim/engine.hpp"
#include "oligosim/experiments.hpp"

namespace oligosim {

// Config files are flat key-value text: one `key = value` pair per line,
// blank lines and `#` comments ignored, with a `[firm]` section per firm.
//
// Global keys (all optional, defaults in SimConfig):
//   horizon        intervals per run (integer >= 1)
//   demand         aggregate demand per interval
//   seed           64-bit generator seed
//   price_process  iid_uniform | random_walk
//   p_min          lower bound on p1 (upper bound is 1 - p_min)
//   step           random-walk half-width
//   eps_price      equality tolerance for price comparisons
//   initial_p1     capital price at t = 0
//
// Firm keys (inside a [firm] section): c, d, gamma_one, gamma_two,
// initial_buffer.
//
// Sweep specs use the same format plus three grid keys:
//   gamma_one_values  list of values (space or comma separated)
//   gamma_two_values  list of values
//   replicates        runs per grid cell (integer >= 1)
//
// Unknown keys, duplicate keys within a scope, and malformed values are
// errors; parse failures throw std::runtime_error naming the line.

SimConfig parse_sim_config(const std::string& text);
SimConfig load_sim_config(const std::string& path);

SweepSpec parse_sweep_spec(const std::string& text);
SweepSpec load_sweep_spec(const std::string& path);

// Canonical text form accepted by parse_sim_config; parsing it back yields
// an identical config.
std::string render_sim_config(const SimConfig& config);

}  // namespace oligosim
