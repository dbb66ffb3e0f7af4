#include "oligosim/report.hpp"

#include <cstddef>
#include <string>

#include "oligosim/rng.hpp"
#include "oligosim/text_format.hpp"

namespace oligosim {

std::string render_run_csv(const RunResult& result) {
  const std::size_t n_firms =
      result.records.empty() ? 0 : result.records.front().cost.size();
  std::string out = "t,p1,p2";
  for (std::size_t i = 1; i <= n_firms; ++i) {
    const std::string suffix = format_int(static_cast<long long>(i));
    out += ",cost_" + suffix + ",y_" + suffix + ",sales_" + suffix +
           ",excess_" + suffix + ",buffer_" + suffix;
  }
  out += ",total_supply,total_excess,unmet_demand\n";
  for (const IntervalRecord& rec : result.records) {
    out += format_int(rec.t);
    out += ',' + format_g9(rec.p1);
    out += ',' + format_g9(rec.p2);
    for (std::size_t i = 0; i < n_firms; ++i) {
      out += ',' + format_g9(rec.cost[i]);
      out += ',' + format_g9(rec.production[i]);
      out += ',' + format_g9(rec.sales[i]);
      out += ',' + format_g9(rec.excess[i]);
      out += ',' + format_g9(rec.buffer[i]);
    }
    out += ',' + format_g9(rec.total_supply);
    out += ',' + format_g9(rec.total_excess);
    out += ',' + format_g9(rec.unmet_demand);
    out += '\n';
  }
  return out;
}

std::string render_sweep_csv(const SweepResult& result) {
  std::string out =
      "gamma_one,gamma_two,runs,mean,median,stddev,fraction_positive\n";
  for (const CellStats& cell : result.cells) {
    out += format_g9(cell.gamma_one);
    out += ',' + format_g9(cell.gamma_two);
    out += ',' + format_int(cell.runs);
    out += ',' + format_g9(cell.mean);
    out += ',' + format_g9(cell.median);
    out += ',' + format_g9(cell.stddev);
    out += ',' + format_g9(cell.fraction_positive);
    out += '\n';
  }
  return out;
}

namespace {

void append_json_array(std::string& out, const std::vector<double>& values,
                       const std::string& indent) {
  if (values.empty()) {
    out += "[]";
    return;
  }
  out += "[\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += indent + "  " + format_g9(values[i]);
    out += (i + 1 < values.size()) ? ",\n" : "\n";
  }
  out += indent + "]";
}

}  // namespace

std::string render_summary_json(const SimConfig& config,
                                const RunResult& result) {
  std::string out = "{\n";
  out += "  \"config\": {\n";
  out += "    \"demand\": " + format_g9(config.demand) + ",\n";
  out += "    \"eps_price\": " + format_g9(config.eps_price) + ",\n";
  out += "    \"firms\": [\n";
  for (std::size_t i = 0; i < config.firms.size(); ++i) {
    const FirmParams& firm = config.firms[i];
    out += "      {\n";
    out += "        \"c\": " + format_g9(firm.c) + ",\n";
    out += "        \"d\": " + format_g9(firm.d) + ",\n";
    out += "        \"gamma_one\": " + format_g9(firm.gamma_one) + ",\n";
    out += "        \"gamma_two\": " + format_g9(firm.gamma_two) + ",\n";
    out +=
        "        \"initial_buffer\": " + format_g9(firm.initial_buffer) + "\n";
    out += (i + 1 < config.firms.size()) ? "      },\n" : "      }\n";
  }
  out += "    ],\n";
  out += "    \"horizon\": " + format_int(config.horizon) + ",\n";
  out += "    \"initial_p1\": " + format_g9(config.initial_p1) + ",\n";
  out += "    \"price_process\": {\n";
  const bool walk = config.price_process.kind == PriceProcessKind::RandomWalk;
  out += std::string("      \"kind\": \"") +
         (walk ? "random_walk" : "iid_uniform") + "\",\n";
  out += "      \"p_min\": " + format_g9(config.price_process.p_min);
  if (walk) {
    out += ",\n      \"step\": " + format_g9(config.price_process.step) + "\n";
  } else {
    out += "\n";
  }
  out += "    },\n";
  out += "    \"seed\": " + format_uint(config.seed) + "\n";
  out += "  },\n";
  out += "  \"final_buffers\": ";
  append_json_array(out, result.final_buffers, "  ");
  out += ",\n";
  out += "  \"global_excess\": " + format_g9(result.global_excess) + ",\n";
  out += std::string("  \"prng\": \"") + kPrngName + "\",\n";
  out += "  \"seed\": " + format_uint(config.seed) + "\n";
  out += "}\n";
  return out;
}

}  // namespace oligosim
