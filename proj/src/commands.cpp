#include "oligosim/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <vector>

#include "oligosim/config.hpp"
#include "oligosim/engine.hpp"
#include "oligosim/experiments.hpp"
#include "oligosim/log.hpp"
#include "oligosim/report.hpp"
#include "oligosim/svg.hpp"
#include "oligosim/text_format.hpp"

namespace oligosim {
namespace {

void write_file(const std::filesystem::path& path,
                const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  out.write(content.data(),
            static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

void ensure_parent_dir(const std::filesystem::path& file) {
  const std::filesystem::path parent = file.parent_path();
  if (!parent.empty()) {
    std::filesystem::create_directories(parent);
  }
}

std::vector<Series> firm_series(const RunResult& result,
                                const std::vector<double> IntervalRecord::*
                                    field) {
  const std::size_t n_firms =
      result.records.empty() ? 0 : result.records.front().cost.size();
  std::vector<Series> series(n_firms);
  for (std::size_t i = 0; i < n_firms; ++i) {
    series[i].label = "firm " + format_int(static_cast<long long>(i + 1));
    series[i].values.reserve(result.records.size());
  }
  for (const IntervalRecord& rec : result.records) {
    for (std::size_t i = 0; i < n_firms; ++i) {
      series[i].values.push_back((rec.*field)[i]);
    }
  }
  return series;
}

}  // namespace

void run_command(const std::string& config_path, const std::string& out_dir,
                 std::optional<std::uint64_t> seed_override) {
  SimConfig config = load_sim_config(config_path);
  if (seed_override.has_value()) {
    config.seed = *seed_override;
  }
  const RunResult result = run(config);

  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  write_file(dir / "run.csv", render_run_csv(result));
  write_file(dir / "summary.json", render_summary_json(config, result));

  std::vector<Series> prices(2);
  prices[0].label = "p1";
  prices[1].label = "p2";
  Series excess{"total excess", {}};
  for (const IntervalRecord& rec : result.records) {
    prices[0].values.push_back(rec.p1);
    prices[1].values.push_back(rec.p2);
    excess.values.push_back(rec.total_excess);
  }
  write_file(dir / "graph1_prices.svg",
             render_line_chart("Commodity prices", "time interval", prices));
  write_file(dir / "graph2_costs.svg",
             render_line_chart("Production costs", "time interval",
                               firm_series(result, &IntervalRecord::cost)));
  write_file(
      dir / "graph3_production.svg",
      render_line_chart("Production amounts", "time interval",
                        firm_series(result, &IntervalRecord::production)));
  write_file(dir / "graph4_excess.svg",
             render_line_chart("Excess of supply", "time interval",
                               std::span<const Series>(&excess, 1)));

  log_info("wrote run.csv, summary.json, and 4 charts to " + out_dir);
  log_info("global excess: " + format_g9(result.global_excess));
}

void sweep_command(const std::string& spec_path, const std::string& out_file,
                   std::optional<std::uint64_t> seed_override) {
  SweepSpec spec = load_sweep_spec(spec_path);
  if (seed_override.has_value()) {
    spec.base.seed = *seed_override;
  }
  log_info("sweeping " +
           format_uint(spec.gamma_one_values.size() *
                       spec.gamma_two_values.size()) +
           " cells x " + format_int(spec.replicates) + " replicates");
  const SweepResult result = sweep(spec);
  ensure_parent_dir(out_file);
  write_file(out_file, render_sweep_csv(result));
  log_info("wrote " + out_file);
}

void calibrate_command(double target, const std::string& spec_path,
                       std::optional<std::uint64_t> seed_override,
                       const std::optional<std::string>& out_config_path) {
  SweepSpec spec = load_sweep_spec(spec_path);
  if (seed_override.has_value()) {
    spec.base.seed = *seed_override;
  }
  const CalibrationResult result = calibrate(target, spec);
  const CellStats& cell = result.chosen;
  std::cout << "gamma_one = " << format_g9(cell.gamma_one) << "\n"
            << "gamma_two = " << format_g9(cell.gamma_two) << "\n"
            << "runs = " << format_int(cell.runs) << "\n"
            << "mean = " << format_g9(cell.mean) << "\n"
            << "median = " << format_g9(cell.median) << "\n"
            << "stddev = " << format_g9(cell.stddev) << "\n"
            << "fraction_positive = " << format_g9(cell.fraction_positive)
            << "\n";
  if (out_config_path.has_value()) {
    SimConfig calibrated = spec.base;
    for (FirmParams& firm : calibrated.firms) {
      firm.gamma_one = cell.gamma_one;
      firm.gamma_two = cell.gamma_two;
    }
    ensure_parent_dir(*out_config_path);
    write_file(*out_config_path, render_sim_config(calibrated));
    log_info("wrote calibrated config to " + *out_config_path);
  }
}

}  // namespace oligosim
