#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "oligosim/experiments.hpp"
#include "oligosim/rng.hpp"
#include "rank_stats.hpp"

using namespace oligosim;

namespace {

SweepSpec base_spec(std::vector<double> gamma_one_values,
                    std::vector<double> gamma_two_values, int replicates,
                    std::uint64_t seed = 42) {
  SweepSpec spec;
  for (double c : {0.20, 0.40, 0.60, 0.80}) {
    FirmParams params;
    params.c = c;
    params.d = 1.0 - c;
    params.initial_buffer = 1.0;
    spec.base.firms.push_back(params);
  }
  spec.base.seed = seed;
  spec.gamma_one_values = std::move(gamma_one_values);
  spec.gamma_two_values = std::move(gamma_two_values);
  spec.replicates = replicates;
  return spec;
}

bool cells_identical(const CellStats& a, const CellStats& b) {
  return a.gamma_one == b.gamma_one && a.gamma_two == b.gamma_two &&
         a.runs == b.runs && a.mean == b.mean && a.median == b.median &&
         a.stddev == b.stddev && a.fraction_positive == b.fraction_positive;
}

}  // namespace

TEST_CASE("sweep spec validation") {
  CHECK_THROWS_AS(base_spec({}, {0.1}, 10).validate(), std::invalid_argument);
  CHECK_THROWS_AS(base_spec({0.1}, {}, 10).validate(), std::invalid_argument);
  CHECK_THROWS_AS(base_spec({0.1}, {0.1}, 0).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(base_spec({-0.1}, {0.1}, 10).validate(),
                  std::invalid_argument);
  CHECK_NOTHROW(base_spec({0.1}, {0.1}, 10).validate());
}

TEST_CASE("replicate seeds are derived, not sequential") {
  const SweepSpec spec = base_spec({0.2, 0.4}, {0.1}, 3);
  const SimConfig a = cell_config(spec, 0, 0, 0);
  const SimConfig b = cell_config(spec, 0, 0, 1);
  const SimConfig c = cell_config(spec, 1, 0, 0);
  CHECK(a.seed != b.seed);
  CHECK(a.seed != c.seed);
  CHECK(a.seed == derive_seed(42, 0, 0, 0));
  CHECK(a.firms[0].gamma_one == 0.2);
  CHECK(a.firms[0].gamma_two == 0.1);
  CHECK(c.firms[2].gamma_one == 0.4);
}

TEST_CASE("single-cell single-replicate sweep equals the underlying run") {
  const SweepSpec spec = base_spec({0.5}, {0.2}, 1);
  const SweepResult result = sweep(spec);
  REQUIRE(result.cells.size() == 1);
  const CellStats& cell = result.cells[0];
  const double excess = run(cell_config(spec, 0, 0, 0)).global_excess;
  CHECK(cell.runs == 1);
  CHECK(cell.mean == excess);
  CHECK(cell.median == excess);
  CHECK(cell.stddev == 0.0);
  CHECK(cell.fraction_positive == (excess > 0.0 ? 1.0 : 0.0));
}

TEST_CASE("zero-gamma grid produces no excess anywhere") {
  const SweepResult result = sweep(base_spec({0.0}, {0.0}, 20));
  REQUIRE(result.cells.size() == 1);
  CHECK(result.cells[0].mean == 0.0);
  CHECK(result.cells[0].median == 0.0);
  CHECK(result.cells[0].stddev == 0.0);
  CHECK(result.cells[0].fraction_positive == 0.0);
}

TEST_CASE("parallel sweep matches the serial reference bit for bit") {
  const SweepSpec spec =
      base_spec({0.0, 0.4, 0.8}, {0.0, 0.3, 0.6}, 50);
  const SweepResult parallel = sweep(spec);
  const SweepResult serial = sweep_serial(spec);
  REQUIRE(parallel.cells.size() == serial.cells.size());
  for (std::size_t i = 0; i < parallel.cells.size(); ++i) {
    CHECK(cells_identical(parallel.cells[i], serial.cells[i]));
  }
}

TEST_CASE("sweeps replay identically") {
  const SweepSpec spec = base_spec({0.2, 0.6}, {0.1, 0.5}, 25);
  const SweepResult a = sweep(spec);
  const SweepResult b = sweep(spec);
  REQUIRE(a.cells.size() == b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    CHECK(cells_identical(a.cells[i], b.cells[i]));
  }
}

TEST_CASE("extending the grid leaves existing cells untouched") {
  const SweepSpec small = base_spec({0.0, 0.4}, {0.0, 0.3}, 30);
  SweepSpec wider = small;
  wider.gamma_one_values.push_back(0.8);
  SweepSpec taller = small;
  taller.gamma_two_values.push_back(0.6);

  const SweepResult s = sweep(small);
  const SweepResult w = sweep(wider);
  const SweepResult t = sweep(taller);

  // cells are row-major: gamma_one outer, gamma_two inner
  CHECK(cells_identical(s.cells[0], w.cells[0]));
  CHECK(cells_identical(s.cells[1], w.cells[1]));
  CHECK(cells_identical(s.cells[2], w.cells[2]));
  CHECK(cells_identical(s.cells[3], w.cells[3]));

  CHECK(cells_identical(s.cells[0], t.cells[0]));
  CHECK(cells_identical(s.cells[1], t.cells[1]));
  CHECK(cells_identical(s.cells[2], t.cells[3]));
  CHECK(cells_identical(s.cells[3], t.cells[4]));
}

TEST_CASE("pick_cell honors distance and the documented tie-breaks") {
  SweepResult result;
  CellStats a;
  a.gamma_one = 0.2;
  a.gamma_two = 0.1;
  a.median = 1.0;
  a.fraction_positive = 1.0;
  CellStats b = a;
  b.gamma_one = 0.4;
  b.median = 1.4;
  CellStats c = a;
  c.gamma_one = 0.6;
  c.median = 2.0;
  c.fraction_positive = 0.4;  // ineligible despite the closest median
  result.cells = {a, b, c};

  const CellStats* chosen = pick_cell(result, 1.5);
  REQUIRE(chosen != nullptr);
  CHECK(chosen->gamma_one == 0.4);

  // equidistant medians: smaller gamma_one wins, then smaller gamma_two
  CellStats lo = a;
  lo.median = 1.4;
  CellStats hi = a;
  hi.gamma_one = 0.4;
  hi.median = 1.6;
  result.cells = {hi, lo};
  CHECK(pick_cell(result, 1.5)->gamma_one == 0.2);

  CellStats twin_a = a;
  twin_a.gamma_two = 0.3;
  CellStats twin_b = a;
  twin_b.gamma_two = 0.2;
  result.cells = {twin_a, twin_b};
  CHECK(pick_cell(result, 1.0)->gamma_two == 0.2);

  result.cells = {c};
  CHECK(pick_cell(result, 1.5) == nullptr);
}

TEST_CASE("calibrate preconditions") {
  const SweepSpec good =
      base_spec({0.0, 0.5, 1.0}, {0.0, 0.5, 1.0}, 5);
  CHECK_THROWS_AS(calibrate(0.0, good), std::invalid_argument);
  CHECK_THROWS_AS(calibrate(-1.0, good), std::invalid_argument);
  CHECK_THROWS_AS(calibrate(1.5, base_spec({0.0, 0.5}, {0.0, 0.5, 1.0}, 5)),
                  std::invalid_argument);
  // an all-zero grid never reaches fraction_positive 0.5
  CHECK_THROWS_AS(calibrate(1.5, base_spec({0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, 5)),
                  std::runtime_error);
}

TEST_CASE("calibrate picks the eligible cell closest to the target") {
  const double target = 1.5;
  const SweepSpec spec =
      base_spec({0.5, 0.6, 0.7}, {0.3, 0.4, 0.5}, 100);
  const CalibrationResult result = calibrate(target, spec);
  CHECK(result.chosen.fraction_positive >= 0.5);

  const SweepResult grid = sweep(spec);
  double best_distance = 1e300;
  for (const CellStats& cell : grid.cells) {
    if (cell.fraction_positive >= 0.5) {
      best_distance =
          std::min(best_distance, std::abs(cell.median - target));
    }
  }
  CHECK(std::abs(result.chosen.median - target) == best_distance);
}

TEST_CASE("median excess trends upward in gamma_one when gamma_two is zero") {
  std::vector<double> gammas;
  for (int i = 0; i <= 10; ++i) {
    gammas.push_back(0.1 * i);
  }
  const SweepSpec spec = base_spec(gammas, {0.0}, 150);
  const SweepResult result = sweep(spec);
  REQUIRE(result.cells.size() == gammas.size());
  std::vector<double> medians;
  for (const CellStats& cell : result.cells) {
    medians.push_back(cell.median);
  }
  const double rho = rank_stats::spearman_rho(gammas, medians);
  CHECK(rho > 0.0);
  const double p =
      rank_stats::spearman_p_value_greater(gammas, medians, 5000, 2026);
  CHECK(p < 0.01);
}
