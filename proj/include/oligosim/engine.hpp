#pragma once

#include <cstdint>
#include <vector>

#include "oligosim/economics.hpp"
#include "oligosim/rng.hpp"

namespace oligosim {

enum class PriceProcessKind { IidUniform, RandomWalk };

// How factor prices move between intervals. Both variants keep p1 inside
// [p_min, 1 - p_min]; the floor keeps unit costs finite.
struct PriceProcess {
  PriceProcessKind kind = PriceProcessKind::IidUniform;
  double p_min = 0.05;
  double step = 0.10;  // random-walk half-width, unused by iid_uniform
};

struct SimConfig {
  std::vector<FirmParams> firms;
  int horizon = 30;         // number of recorded intervals
  double demand = 1.0;      // aggregate demand, constant through the cycle
  std::uint64_t seed = 0;
  PriceProcess price_process;
  double eps_price = 1e-12;  // equality tolerance for price comparisons
  double initial_p1 = 0.5;

  void validate() const;  // throws std::invalid_argument
};

struct FirmState {
  double production = 0.0;
  double selling_price = 0.0;  // equals current unit cost
  double buffer = 0.0;
  double cumulative_excess = 0.0;
};

// Full snapshot of one interval. Per-firm vectors are indexed like
// SimConfig::firms. Buffers are end-of-interval values (after the disposal
// debit).
struct IntervalRecord {
  int t = 0;
  double p1 = 0.0;
  double p2 = 0.0;
  std::vector<double> cost;
  std::vector<double> production;
  std::vector<double> sales;
  std::vector<double> excess;
  std::vector<double> buffer;
  double total_supply = 0.0;
  double total_excess = 0.0;
  double unmet_demand = 0.0;
};

struct RunResult {
  std::vector<IntervalRecord> records;  // one per interval, t = 0..horizon-1
  double global_excess = 0.0;           // sum of total_excess over intervals
  std::vector<double> cumulative_excess;
  std::vector<double> final_buffers;
};

struct EngineState {
  std::vector<FirmState> firms;
  FactorPrices prices;
  int t = 0;
  SplitMix64 rng;
};

// Draws the next factor prices and advances the generator state.
FactorPrices next_prices(SplitMix64& rng, const PriceProcess& process,
                         const FactorPrices& current);

// State at t = 0: equal output shares (demand / N each), selling prices at
// the initial factor prices, untouched buffers.
EngineState init_state(const SimConfig& config);

// One full interval after the first: draw prices, reprice every firm at its
// new unit cost, apply the production response against the previous selling
// price, clear the market, debit each buffer by the cost value of its
// disposed output. Requires state.t < config.horizon.
IntervalRecord step(EngineState& state, const SimConfig& config);

// Runs the whole cycle. Interval 0 is the initialization snapshot (no price
// shock, no response); shocks begin at t = 1. Deterministic: identical
// (config, seed) gives identical records.
RunResult run(const SimConfig& config);

}  // namespace oligosim
