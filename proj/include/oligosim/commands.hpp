#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace oligosim {

// Subcommand bodies for the CLI front end. Each loads its input file,
// applies the optional --seed override, and writes or prints its results;
// failures surface as exceptions for the front end to report.

// Writes run.csv, summary.json, and the four charts (graph1_prices.svg,
// graph2_costs.svg, graph3_production.svg, graph4_excess.svg) into out_dir,
// creating it if needed.
void run_command(const std::string& config_path, const std::string& out_dir,
                 std::optional<std::uint64_t> seed_override);

// Runs the grid sweep and writes one CSV row per cell to out_file.
void sweep_command(const std::string& spec_path, const std::string& out_file,
                   std::optional<std::uint64_t> seed_override);

// Calibrates the gamma pair against the target median global excess and
// prints the chosen cell's statistics to stdout as key = value lines. When
// out_config_path is set, also writes a run config with the chosen gammas
// applied to every firm.
void calibrate_command(double target, const std::string& spec_path,
                       std::optional<std::uint64_t> seed_override,
                       const std::optional<std::string>& out_config_path);

}  // namespace oligosim
