#include <stdexcept>
#include <string>

#include <doctest.h>

#include "oligosim/config.hpp"

using namespace oligosim;

namespace {

const char* kFourFirms = R"(
# standard four-firm setup
horizon = 30
demand = 1
seed = 42
price_process = iid_uniform
p_min = 0.05
eps_price = 1e-12
initial_p1 = 0.5

[firm]
c = 0.2
d = 0.8
gamma_one = 0.7
gamma_two = 0.6
initial_buffer = 1

[firm]
c = 0.4
d = 0.6
gamma_one = 0.7
gamma_two = 0.6
initial_buffer = 1

[firm]
c = 0.6
d = 0.4
gamma_one = 0.7
gamma_two = 0.6
initial_buffer = 1

[firm]
c = 0.8
d = 0.2
gamma_one = 0.7
gamma_two = 0.6
initial_buffer = 1
)";

}  // namespace

TEST_CASE("parsing a full run config") {
  const SimConfig config = parse_sim_config(kFourFirms);
  CHECK(config.horizon == 30);
  CHECK(config.demand == 1.0);
  CHECK(config.seed == 42);
  CHECK(config.price_process.kind == PriceProcessKind::IidUniform);
  CHECK(config.price_process.p_min == 0.05);
  CHECK(config.eps_price == 1e-12);
  CHECK(config.initial_p1 == 0.5);
  REQUIRE(config.firms.size() == 4);
  CHECK(config.firms[0].c == 0.2);
  CHECK(config.firms[0].d == 0.8);
  CHECK(config.firms[3].c == 0.8);
  CHECK(config.firms[2].gamma_one == 0.7);
  CHECK(config.firms[2].gamma_two == 0.6);
  CHECK(config.firms[1].initial_buffer == 1.0);
}

TEST_CASE("defaults apply when keys are omitted") {
  const SimConfig config = parse_sim_config("[firm]\nc = 0.5\nd = 0.5\n");
  CHECK(config.horizon == 30);
  CHECK(config.demand == 1.0);
  CHECK(config.seed == 0);
  CHECK(config.price_process.kind == PriceProcessKind::IidUniform);
  CHECK(config.initial_p1 == 0.5);
  CHECK(config.firms.size() == 1);
  CHECK(config.firms[0].gamma_one == 0.0);
}

TEST_CASE("random walk keys") {
  const SimConfig config = parse_sim_config(
      "price_process = random_walk\nstep = 0.2\np_min = 0.1\n"
      "[firm]\nc = 0.5\nd = 0.5\n");
  CHECK(config.price_process.kind == PriceProcessKind::RandomWalk);
  CHECK(config.price_process.step == 0.2);
  CHECK(config.price_process.p_min == 0.1);
}

TEST_CASE("parse errors carry the offending line") {
  CHECK_THROWS_AS(parse_sim_config("nonsense = 1\n[firm]\nc=0.5\nd=0.5\n"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_sim_config("horizon = ten\n[firm]\nc=0.5\nd=0.5\n"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_sim_config("horizon\n[firm]\nc=0.5\nd=0.5\n"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_sim_config("horizon =\n[firm]\nc=0.5\nd=0.5\n"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_sim_config("seed = -3\n[firm]\nc=0.5\nd=0.5\n"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_sim_config("[factory]\nc=0.5\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_sim_config("[firm\nc=0.5\n"), std::runtime_error);
  // firm keys are invalid at global scope, global keys inside a firm
  CHECK_THROWS_AS(parse_sim_config("c = 0.5\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_sim_config("[firm]\nhorizon = 3\n"),
                  std::runtime_error);

  try {
    parse_sim_config("horizon = 30\nhorizon = 31\n[firm]\nc=0.5\nd=0.5\n");
    FAIL("duplicate key accepted");
  } catch (const std::runtime_error& e) {
    const std::string message = e.what();
    CHECK(message.find("line 2") != std::string::npos);
    CHECK(message.find("duplicate") != std::string::npos);
  }
}

TEST_CASE("duplicate keys are scoped per firm section") {
  const SimConfig config = parse_sim_config(
      "[firm]\nc = 0.3\nd = 0.7\n[firm]\nc = 0.6\nd = 0.4\n");
  REQUIRE(config.firms.size() == 2);
  CHECK(config.firms[0].c == 0.3);
  CHECK(config.firms[1].c == 0.6);
}

TEST_CASE("semantic validation still runs after parsing") {
  // parses fine, fails the c + d = 1 invariant
  CHECK_THROWS_AS(parse_sim_config("[firm]\nc = 0.5\nd = 0.6\n"),
                  std::invalid_argument);
  // no firm section at all
  CHECK_THROWS_AS(parse_sim_config("horizon = 30\n"), std::invalid_argument);
}

TEST_CASE("sweep specs add grid keys on top of the run format") {
  // grid keys are global, so they go before the firm sections
  const std::string text = "gamma_one_values = 0, 0.5, 1.0\n"
                           "gamma_two_values = 0 0.25 0.5\n"
                           "replicates = 64\n" +
                           std::string(kFourFirms);
  // grid keys are only legal in sweep specs
  CHECK_THROWS_AS(parse_sim_config(text), std::runtime_error);

  const SweepSpec spec = parse_sweep_spec(text);
  CHECK(spec.base.horizon == 30);
  CHECK(spec.base.firms.size() == 4);
  CHECK(spec.gamma_one_values == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(spec.gamma_two_values == std::vector<double>{0.0, 0.25, 0.5});
  CHECK(spec.replicates == 64);

  CHECK_THROWS_AS(parse_sweep_spec(kFourFirms), std::runtime_error);
  const SweepSpec defaulted = parse_sweep_spec(
      "gamma_one_values = 0.5\ngamma_two_values = 0.25\n" +
      std::string(kFourFirms));
  CHECK(defaulted.replicates == 1000);
}

TEST_CASE("canonical rendering round-trips") {
  const SimConfig config = parse_sim_config(kFourFirms);
  const std::string rendered = render_sim_config(config);
  const SimConfig reparsed = parse_sim_config(rendered);
  CHECK(render_sim_config(reparsed) == rendered);
  CHECK(reparsed.seed == config.seed);
  CHECK(reparsed.firms.size() == config.firms.size());
  CHECK(reparsed.firms[0].c == config.firms[0].c);

  SimConfig walk = config;
  walk.price_process.kind = PriceProcessKind::RandomWalk;
  walk.price_process.step = 0.25;
  const std::string walk_text = render_sim_config(walk);
  CHECK(walk_text.find("step = 0.25") != std::string::npos);
  const SimConfig walk_reparsed = parse_sim_config(walk_text);
  CHECK(walk_reparsed.price_process.kind == PriceProcessKind::RandomWalk);
  CHECK(walk_reparsed.price_process.step == 0.25);
}

TEST_CASE("loading a missing file reports the path") {
  try {
    load_sim_config("/nonexistent/oligosim.cfg");
    FAIL("missing file accepted");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("/nonexistent/oligosim.cfg") !=
          std::string::npos);
  }
}
