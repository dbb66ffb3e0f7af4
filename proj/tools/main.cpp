#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "oligosim/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "oligosim: discrete-time simulator of cost-based oligopoly price "
      "competition"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed_override;

  auto* run_cmd = app.add_subcommand(
      "run", "Simulate one cycle; write CSV, JSON summary, and SVG charts");
  std::string config_path;
  std::string out_dir;
  run_cmd->add_option("--config", config_path, "Run config file")
      ->required();
  run_cmd->add_option("--out", out_dir, "Output directory")->required();
  run_cmd->add_option("--seed", seed_override,
                      "Override the seed from the config");

  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Run a (gamma_one, gamma_two) grid sweep; write cell "
               "statistics as CSV");
  std::string spec_path;
  std::string sweep_out;
  sweep_cmd->add_option("--spec", spec_path, "Sweep spec file")->required();
  sweep_cmd->add_option("--out", sweep_out, "Output CSV file")->required();
  sweep_cmd->add_option("--seed", seed_override,
                        "Override the base seed from the spec");

  auto* calibrate_cmd = app.add_subcommand(
      "calibrate", "Pick the grid cell whose median global excess is "
                   "closest to the target");
  double target = 0.0;
  std::string calibrate_spec_path;
  std::optional<std::string> calibrate_out;
  calibrate_cmd->add_option("--target", target, "Target median global excess")
      ->required();
  calibrate_cmd->add_option("--spec", calibrate_spec_path, "Sweep spec file")
      ->required();
  calibrate_cmd->add_option("--out", calibrate_out,
                            "Also write a run config with the chosen gammas");
  calibrate_cmd->add_option("--seed", seed_override,
                            "Override the base seed from the spec");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      oligosim::run_command(config_path, out_dir, seed_override);
    } else if (sweep_cmd->parsed()) {
      oligosim::sweep_command(spec_path, sweep_out, seed_override);
    } else if (calibrate_cmd->parsed()) {
      oligosim::calibrate_command(target, calibrate_spec_path, seed_override,
                                  calibrate_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
