#include "oligosim/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "oligosim/text_format.hpp"

namespace oligosim {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw std::runtime_error("config line " + std::to_string(line) + ": " +
                           message);
}

double parse_double(std::string_view token, int line) {
  double value = 0.0;
  const char* end = token.data() + token.size();
  const auto res = std::from_chars(token.data(), end, value);
  if (res.ec != std::errc() || res.ptr != end) {
    fail(line, "expected a number, got '" + std::string(token) + "'");
  }
  return value;
}

int parse_int(std::string_view token, int line) {
  int value = 0;
  const char* end = token.data() + token.size();
  const auto res = std::from_chars(token.data(), end, value);
  if (res.ec != std::errc() || res.ptr != end) {
    fail(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::uint64_t parse_uint64(std::string_view token, int line) {
  std::uint64_t value = 0;
  const char* end = token.data() + token.size();
  const auto res = std::from_chars(token.data(), end, value);
  if (res.ec != std::errc() || res.ptr != end) {
    fail(line, "expected an unsigned integer, got '" + std::string(token) +
                   "'");
  }
  return value;
}

std::vector<double> parse_double_list(std::string_view text, int line) {
  std::vector<double> values;
  std::string normalized(text);
  for (char& ch : normalized) {
    if (ch == ',') {
      ch = ' ';
    }
  }
  std::istringstream stream(normalized);
  std::string token;
  while (stream >> token) {
    values.push_back(parse_double(token, line));
  }
  if (values.empty()) {
    fail(line, "expected at least one value");
  }
  return values;
}

// Sweep-grid keys collected alongside the base config; present only when
// the caller allows them.
struct SweepFields {
  std::vector<double> gamma_one_values;
  std::vector<double> gamma_two_values;
  int replicates = 1000;
  bool saw_gamma_one = false;
  bool saw_gamma_two = false;
};

struct ParseState {
  SimConfig config;
  SweepFields sweep;
  // -1 while in the global scope, otherwise the index of the open firm
  // section.
  int firm_index = -1;
  std::set<std::string> seen_keys;
};

void apply_global_key(ParseState& state, const std::string& key,
                      std::string_view value, int line, bool allow_sweep) {
  SimConfig& cfg = state.config;
  if (key == "horizon") {
    cfg.horizon = parse_int(value, line);
  } else if (key == "demand") {
    cfg.demand = parse_double(value, line);
  } else if (key == "seed") {
    cfg.seed = parse_uint64(value, line);
  } else if (key == "price_process") {
    if (value == "iid_uniform") {
      cfg.price_process.kind = PriceProcessKind::IidUniform;
    } else if (value == "random_walk") {
      cfg.price_process.kind = PriceProcessKind::RandomWalk;
    } else {
      fail(line, "price_process must be iid_uniform or random_walk, got '" +
                     std::string(value) + "'");
    }
  } else if (key == "p_min") {
    cfg.price_process.p_min = parse_double(value, line);
  } else if (key == "step") {
    cfg.price_process.step = parse_double(value, line);
  } else if (key == "eps_price") {
    cfg.eps_price = parse_double(value, line);
  } else if (key == "initial_p1") {
    cfg.initial_p1 = parse_double(value, line);
  } else if (allow_sweep && key == "gamma_one_values") {
    state.sweep.gamma_one_values = parse_double_list(value, line);
    state.sweep.saw_gamma_one = true;
  } else if (allow_sweep && key == "gamma_two_values") {
    state.sweep.gamma_two_values = parse_double_list(value, line);
    state.sweep.saw_gamma_two = true;
  } else if (allow_sweep && key == "replicates") {
    state.sweep.replicates = parse_int(value, line);
  } else {
    fail(line, "unknown key '" + key + "'");
  }
}

void apply_firm_key(ParseState& state, const std::string& key,
                    std::string_view value, int line) {
  FirmParams& firm = state.config.firms.back();
  double* field = nullptr;
  if (key == "c") {
    field = &firm.c;
  } else if (key == "d") {
    field = &firm.d;
  } else if (key == "gamma_one") {
    field = &firm.gamma_one;
  } else if (key == "gamma_two") {
    field = &firm.gamma_two;
  } else if (key == "initial_buffer") {
    field = &firm.initial_buffer;
  } else {
    fail(line, "unknown firm key '" + key + "'");
  }
  *field = parse_double(value, line);
}

ParseState parse_text(const std::string& text, bool allow_sweep) {
  ParseState state;
  std::istringstream stream(text);
  std::string raw_line;
  int line_number = 0;
  while (std::getline(stream, raw_line)) {
    ++line_number;
    std::string_view line = trim(raw_line);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') {
        fail(line_number, "unterminated section header");
      }
      const std::string_view name = trim(line.substr(1, line.size() - 2));
      if (name != "firm") {
        fail(line_number, "unknown section '" + std::string(name) + "'");
      }
      state.config.firms.emplace_back();
      state.firm_index = static_cast<int>(state.config.firms.size()) - 1;
      state.seen_keys.clear();
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      fail(line_number, "expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) {
      fail(line_number, "empty key");
    }
    if (value.empty()) {
      fail(line_number, "empty value for key '" + key + "'");
    }
    if (!state.seen_keys.insert(key).second) {
      fail(line_number, "duplicate key '" + key + "'");
    }
    if (state.firm_index < 0) {
      apply_global_key(state, key, value, line_number, allow_sweep);
    } else {
      apply_firm_key(state, key, value, line_number);
    }
  }
  return state;
}

std::string read_file(const std::string& path) {
  std::ifstream input(path, std::ios::binary);
  if (!input) {
    throw std::runtime_error("cannot open config file: " + path);
  }
  std::ostringstream contents;
  contents << input.rdbuf();
  return contents.str();
}

}  // namespace

SimConfig parse_sim_config(const std::string& text) {
  ParseState state = parse_text(text, /*allow_sweep=*/false);
  state.config.validate();
  return state.config;
}

SimConfig load_sim_config(const std::string& path) {
  return parse_sim_config(read_file(path));
}

SweepSpec parse_sweep_spec(const std::string& text) {
  ParseState state = parse_text(text, /*allow_sweep=*/true);
  if (!state.sweep.saw_gamma_one) {
    throw std::runtime_error("sweep spec is missing gamma_one_values");
  }
  if (!state.sweep.saw_gamma_two) {
    throw std::runtime_error("sweep spec is missing gamma_two_values");
  }
  SweepSpec spec;
  spec.base = state.config;
  spec.gamma_one_values = state.sweep.gamma_one_values;
  spec.gamma_two_values = state.sweep.gamma_two_values;
  spec.replicates = state.sweep.replicates;
  spec.validate();
  return spec;
}

SweepSpec load_sweep_spec(const std::string& path) {
  return parse_sweep_spec(read_file(path));
}

std::string render_sim_config(const SimConfig& config) {
  std::string out;
  out += "horizon = " + format_int(config.horizon) + "\n";
  out += "demand = " + format_g9(config.demand) + "\n";
  out += "seed = " + format_uint(config.seed) + "\n";
  const bool walk = config.price_process.kind == PriceProcessKind::RandomWalk;
  out += std::string("price_process = ") +
         (walk ? "random_walk" : "iid_uniform") + "\n";
  out += "p_min = " + format_g9(config.price_process.p_min) + "\n";
  if (walk) {
    out += "step = " + format_g9(config.price_process.step) + "\n";
  }
  out += "eps_price = " + format_g9(config.eps_price) + "\n";
  out += "initial_p1 = " + format_g9(config.initial_p1) + "\n";
  for (const FirmParams& firm : config.firms) {
    out += "\n[firm]\n";
    out += "c = " + format_g9(firm.c) + "\n";
    out += "d = " + format_g9(firm.d) + "\n";
    out += "gamma_one = " + format_g9(firm.gamma_one) + "\n";
    out += "gamma_two = " + format_g9(firm.gamma_two) + "\n";
    out += "initial_buffer = " + format_g9(firm.initial_buffer) + "\n";
  }
  return out;
}

}  // namespace oligosim
