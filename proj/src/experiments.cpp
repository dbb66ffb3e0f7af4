#include "oligosim/experiments.hpp"

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

#include "oligosim/rng.hpp"
#include "oligosim/stats.hpp"

namespace oligosim {

void SweepSpec::validate() const {
  base.validate();
  if (gamma_one_values.empty() || gamma_two_values.empty()) {
    throw std::invalid_argument("sweep grid must have at least one cell");
  }
  for (double g : gamma_one_values) {
    if (!(g >= 0.0)) {
      throw std::invalid_argument("gamma_one values must be non-negative");
    }
  }
  for (double g : gamma_two_values) {
    if (!(g >= 0.0)) {
      throw std::invalid_argument("gamma_two values must be non-negative");
    }
  }
  if (replicates < 1) {
    throw std::invalid_argument("replicates must be at least 1");
  }
}

SimConfig cell_config(const SweepSpec& spec, std::size_t i1, std::size_t i2,
                      int replicate) {
  SimConfig cfg = spec.base;
  for (FirmParams& firm : cfg.firms) {
    firm.gamma_one = spec.gamma_one_values[i1];
    firm.gamma_two = spec.gamma_two_values[i2];
  }
  cfg.seed = derive_seed(spec.base.seed, static_cast<std::uint64_t>(i1),
                         static_cast<std::uint64_t>(i2),
                         static_cast<std::uint64_t>(replicate));
  return cfg;
}

namespace {

CellStats summarize_cell(const SweepSpec& spec, std::size_t i1, std::size_t i2,
                         std::span<const double> excess) {
  CellStats stats;
  stats.gamma_one = spec.gamma_one_values[i1];
  stats.gamma_two = spec.gamma_two_values[i2];
  stats.runs = static_cast<int>(excess.size());
  stats.mean = mean(excess);
  stats.median = median(excess);
  stats.stddev = sample_stddev(excess);
  stats.fraction_positive = fraction_positive(excess);
  return stats;
}

}  // namespace

SweepResult sweep(const SweepSpec& spec) {
  spec.validate();
  const std::size_t n1 = spec.gamma_one_values.size();
  const std::size_t n2 = spec.gamma_two_values.size();
  const std::size_t reps = static_cast<std::size_t>(spec.replicates);
  const std::size_t n_cells = n1 * n2;

  // Every replicate writes its global excess into its own slot, so the loop
  // body is free of shared mutable state and the later reduction sees values
  // in a fixed order no matter how iterations were scheduled.
  std::vector<double> excess(n_cells * reps);

  const std::ptrdiff_t total =
      static_cast<std::ptrdiff_t>(n_cells) * static_cast<std::ptrdiff_t>(reps);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t flat = 0; flat < total; ++flat) {
    const std::size_t cell = static_cast<std::size_t>(flat) / reps;
    const std::size_t rep = static_cast<std::size_t>(flat) % reps;
    const std::size_t i1 = cell / n2;
    const std::size_t i2 = cell % n2;
    const SimConfig cfg = cell_config(spec, i1, i2, static_cast<int>(rep));
    excess[static_cast<std::size_t>(flat)] = run(cfg).global_excess;
  }

  SweepResult result;
  result.cells.reserve(n_cells);
  for (std::size_t i1 = 0; i1 < n1; ++i1) {
    for (std::size_t i2 = 0; i2 < n2; ++i2) {
      const std::size_t cell = i1 * n2 + i2;
      std::span<const double> cell_excess(excess.data() + cell * reps, reps);
      result.cells.push_back(summarize_cell(spec, i1, i2, cell_excess));
    }
  }
  return result;
}

SweepResult sweep_serial(const SweepSpec& spec) {
  spec.validate();
  const std::size_t n1 = spec.gamma_one_values.size();
  const std::size_t n2 = spec.gamma_two_values.size();
  const std::size_t reps = static_cast<std::size_t>(spec.replicates);

  SweepResult result;
  result.cells.reserve(n1 * n2);
  std::vector<double> excess(reps);
  for (std::size_t i1 = 0; i1 < n1; ++i1) {
    for (std::size_t i2 = 0; i2 < n2; ++i2) {
      for (std::size_t rep = 0; rep < reps; ++rep) {
        const SimConfig cfg = cell_config(spec, i1, i2, static_cast<int>(rep));
        excess[rep] = run(cfg).global_excess;
      }
      result.cells.push_back(summarize_cell(spec, i1, i2, excess));
    }
  }
  return result;
}

const CellStats* pick_cell(const SweepResult& result, double target) {
  const CellStats* best = nullptr;
  for (const CellStats& cell : result.cells) {
    if (cell.fraction_positive < 0.5) {
      continue;
    }
    if (best == nullptr) {
      best = &cell;
      continue;
    }
    const double dist = std::abs(cell.median - target);
    const double best_dist = std::abs(best->median - target);
    if (dist < best_dist ||
        (dist == best_dist &&
         (cell.gamma_one < best->gamma_one ||
          (cell.gamma_one == best->gamma_one &&
           cell.gamma_two < best->gamma_two)))) {
      best = &cell;
    }
  }
  return best;
}

CalibrationResult calibrate(double target, const SweepSpec& spec) {
  if (!(target > 0.0)) {
    throw std::invalid_argument("calibration target must be positive");
  }
  spec.validate();
  if (spec.gamma_one_values.size() < 3 || spec.gamma_two_values.size() < 3) {
    throw std::invalid_argument(
        "calibration needs a grid of at least 3x3 gamma values");
  }
  const SweepResult result = sweep(spec);
  const CellStats* chosen = pick_cell(result, target);
  if (chosen == nullptr) {
    throw std::runtime_error(
        "no grid cell produced positive excess in at least half of its runs");
  }
  return CalibrationResult{*chosen};
}

}  // namespace oligosim
