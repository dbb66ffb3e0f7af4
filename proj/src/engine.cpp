#include "oligosim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oligosim/market.hpp"

namespace oligosim {

namespace {

// Clears the market at current productions, settles buffers and metrics,
// records the interval, and advances time. Shared by the t = 0 snapshot and
// every shocked step.
IntervalRecord settle(EngineState& state, const SimConfig& config) {
  const std::size_t n = state.firms.size();
  std::vector<double> productions(n);
  for (std::size_t i = 0; i < n; ++i) {
    productions[i] = state.firms[i].production;
  }
  const ClearingResult cleared = clear_market(productions, config.demand);

  IntervalRecord rec;
  rec.t = state.t;
  rec.p1 = state.prices.p1();
  rec.p2 = state.prices.p2();
  rec.cost.resize(n);
  rec.production.resize(n);
  rec.sales.resize(n);
  rec.excess.resize(n);
  rec.buffer.resize(n);
  double total_supply = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    FirmState& firm = state.firms[i];
    // Disposed output is written off at the cost it took to produce; with
    // price equal to cost this is the only loss in the model.
    firm.buffer -= firm.selling_price * cleared.excess[i];
    firm.cumulative_excess += cleared.excess[i];
    rec.cost[i] = firm.selling_price;
    rec.production[i] = firm.production;
    rec.sales[i] = cleared.sales[i];
    rec.excess[i] = cleared.excess[i];
    rec.buffer[i] = firm.buffer;
    total_supply += firm.production;
  }
  rec.total_supply = total_supply;
  rec.total_excess = cleared.total_excess;
  rec.unmet_demand = cleared.unmet_demand;
  state.t += 1;
  return rec;
}

}  // namespace

void SimConfig::validate() const {
  if (firms.empty()) {
    throw std::invalid_argument("config needs at least one firm");
  }
  for (const FirmParams& firm : firms) {
    firm.validate();
  }
  if (horizon < 1) {
    throw std::invalid_argument("horizon must be >= 1");
  }
  if (!(demand >= 0.0) || !std::isfinite(demand)) {
    throw std::invalid_argument("demand must be >= 0");
  }
  if (!(eps_price >= 0.0)) {
    throw std::invalid_argument("eps_price must be >= 0");
  }
  if (!(initial_p1 > 0.0 && initial_p1 < 1.0)) {
    throw std::invalid_argument("initial_p1 must lie in (0, 1)");
  }
  if (!(price_process.p_min > 0.0 && price_process.p_min < 0.5)) {
    throw std::invalid_argument("p_min must lie in (0, 0.5)");
  }
  if (!(price_process.step >= 0.0)) {
    throw std::invalid_argument("step must be >= 0");
  }
}

FactorPrices next_prices(SplitMix64& rng, const PriceProcess& process,
                         const FactorPrices& current) {
  const double u = rng.next_double();
  switch (process.kind) {
    case PriceProcessKind::IidUniform:
      return FactorPrices(process.p_min + u * (1.0 - 2.0 * process.p_min));
    case PriceProcessKind::RandomWalk: {
      const double delta = (2.0 * u - 1.0) * process.step;
      return FactorPrices(std::clamp(current.p1() + delta, process.p_min,
                                     1.0 - process.p_min));
    }
  }
  return current;  // unreachable
}

EngineState init_state(const SimConfig& config) {
  config.validate();
  EngineState state{{}, FactorPrices(config.initial_p1), 0,
                    SplitMix64(config.seed)};
  const double share = config.demand / static_cast<double>(config.firms.size());
  state.firms.reserve(config.firms.size());
  for (const FirmParams& firm : config.firms) {
    state.firms.push_back(FirmState{share, unit_cost(state.prices, firm),
                                    firm.initial_buffer, 0.0});
  }
  return state;
}

IntervalRecord step(EngineState& state, const SimConfig& config) {
  if (state.t >= config.horizon) {
    throw std::logic_error("step past horizon");
  }
  state.prices = next_prices(state.rng, config.price_process, state.prices);
  for (std::size_t i = 0; i < state.firms.size(); ++i) {
    FirmState& firm = state.firms[i];
    const double new_price = unit_cost(state.prices, config.firms[i]);
    firm.production = production_response(firm.production, firm.selling_price,
                                          new_price, config.firms[i],
                                          config.eps_price);
    firm.selling_price = new_price;
  }
  return settle(state, config);
}

RunResult run(const SimConfig& config) {
  EngineState state = init_state(config);
  RunResult result;
  result.records.reserve(static_cast<std::size_t>(config.horizon));
  result.records.push_back(settle(state, config));
  for (int t = 1; t < config.horizon; ++t) {
    result.records.push_back(step(state, config));
  }
  double global_excess = 0.0;
  for (const IntervalRecord& rec : result.records) {
    global_excess += rec.total_excess;
  }
  result.global_excess = global_excess;
  result.cumulative_excess.reserve(state.firms.size());
  result.final_buffers.reserve(state.firms.size());
  for (const FirmState& firm : state.firms) {
    result.cumulative_excess.push_back(firm.cumulative_excess);
    result.final_buffers.push_back(firm.buffer);
  }
  return result;
}

}  // namespace oligosim
