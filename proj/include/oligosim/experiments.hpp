#pragma once

#include <cstdint>
#include <vector>

#include "oligosim/engine.hpp"

namespace oligosim {

// A (gamma_one, gamma_two) grid of run ensembles over the base config. Every
// firm in a cell shares that cell's gamma pair; the base config's own gammas
// are placeholders. Replicate r of cell (i1, i2) runs with
// derive_seed(base.seed, i1, i2, r).
struct SweepSpec {
  SimConfig base;
  std::vector<double> gamma_one_values;
  std::vector<double> gamma_two_values;
  int replicates = 1000;

  void validate() const;  // throws std::invalid_argument
};

// Summary statistics of global_excess over one cell's replicates.
struct CellStats {
  double gamma_one = 0.0;
  double gamma_two = 0.0;
  int runs = 0;
  double mean = 0.0;
  double median = 0.0;
  double stddev = 0.0;
  double fraction_positive = 0.0;
};

// Cells in row-major order: gamma_one outer, gamma_two inner, both in spec
// order.
struct SweepResult {
  std::vector<CellStats> cells;
};

// Effective config for one replicate of one grid cell.
SimConfig cell_config(const SweepSpec& spec, std::size_t i1, std::size_t i2,
                      int replicate);

// Runs every (cell, replicate) combination. Replicates are independent and
// execute in parallel with OpenMP; per-cell statistics are reduced in
// replicate order, so the result is identical to sweep_serial regardless of
// scheduling.
SweepResult sweep(const SweepSpec& spec);

// Plain-loop reference implementation, kept for testing the parallel path
// and for the benchmark.
SweepResult sweep_serial(const SweepSpec& spec);

struct CalibrationResult {
  CellStats chosen;
};

// Among cells with fraction_positive >= 0.5, returns the one whose median is
// closest to target; ties go to the smaller gamma_one, then the smaller
// gamma_two. Null if no cell qualifies.
const CellStats* pick_cell(const SweepResult& result, double target);

// Sweeps the grid and picks the cell per pick_cell. Requires target > 0 and
// a grid of at least 3x3; throws std::runtime_error if no cell reaches
// fraction_positive >= 0.5.
CalibrationResult calibrate(double target, const SweepSpec& spec);

}  // namespace oligosim
