#include "oligosim/economics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace oligosim {

namespace {

constexpr double kExponentSumTolerance = 1e-12;

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(name) + " must be finite");
  }
}

}  // namespace

void FirmParams::validate() const {
  require_finite(c, "c");
  require_finite(d, "d");
  require_finite(gamma_one, "gamma_one");
  require_finite(gamma_two, "gamma_two");
  require_finite(initial_buffer, "initial_buffer");
  if (!(c > 0.0 && c < 1.0)) {
    throw std::invalid_argument("c must lie in (0, 1)");
  }
  if (!(d > 0.0 && d < 1.0)) {
    throw std::invalid_argument("d must lie in (0, 1)");
  }
  if (std::abs(c + d - 1.0) > kExponentSumTolerance) {
    throw std::invalid_argument("exponents must satisfy c + d = 1");
  }
  if (gamma_one < 0.0) {
    throw std::invalid_argument("gamma_one must be >= 0");
  }
  if (gamma_two < 0.0) {
    throw std::invalid_argument("gamma_two must be >= 0");
  }
  if (initial_buffer < 0.0) {
    throw std::invalid_argument("initial_buffer must be >= 0");
  }
}

FactorPrices::FactorPrices(double p1) : p1_(p1) {
  if (!(p1 > 0.0 && p1 < 1.0)) {
    throw std::invalid_argument("p1 must lie strictly in (0, 1)");
  }
}

double output(double x1, double x2, const FirmParams& params) {
  if (x1 < 0.0 || x2 < 0.0) {
    throw std::domain_error("factor quantities must be >= 0");
  }
  return std::pow(x1, params.c) * std::pow(x2, params.d);
}

FactorDemands factor_demands(double y, double p1, double p2,
                             const FirmParams& params) {
  if (y < 0.0) {
    throw std::domain_error("target output must be >= 0");
  }
  if (!(p1 > 0.0) || !(p2 > 0.0)) {
    throw std::domain_error("factor prices must be > 0");
  }
  const double ratio = params.c * p2 / (params.d * p1);
  return FactorDemands{y * std::pow(ratio, params.d),
                       y * std::pow(1.0 / ratio, params.c)};
}

FactorDemands factor_demands(double y, const FactorPrices& prices,
                             const FirmParams& params) {
  return factor_demands(y, prices.p1(), prices.p2(), params);
}

double unit_cost(double p1, double p2, const FirmParams& params) {
  if (!(p1 > 0.0) || !(p2 > 0.0)) {
    throw std::domain_error("factor prices must be > 0");
  }
  return std::pow(p1 / params.c, params.c) * std::pow(p2 / params.d, params.d);
}

double unit_cost(const FactorPrices& prices, const FirmParams& params) {
  return unit_cost(prices.p1(), prices.p2(), params);
}

PriceMove classify_price_move(double p_new, double p_old, double eps) {
  const double diff = p_new - p_old;
  if (std::abs(diff) <= eps) {
    return PriceMove::Unchanged;
  }
  return diff < 0.0 ? PriceMove::Lowered : PriceMove::Raised;
}

double response_multiplier(double p_old, double p_new,
                           const FirmParams& params, double eps) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  switch (classify_price_move(p_new, p_old, eps)) {
    case PriceMove::Unchanged:
      return 1.0;
    case PriceMove::Lowered:
      return 1.0 + params.gamma_one * std::atan(p_old - p_new) / half_pi;
    case PriceMove::Raised:
      return 1.0 + params.gamma_two * std::atan(p_old - p_new) / half_pi;
  }
  return 1.0;  // unreachable
}

double production_response(double y_old, double p_old, double p_new,
                           const FirmParams& params, double eps) {
  if (y_old < 0.0) {
    throw std::domain_error("production level must be >= 0");
  }
  const double mult = response_multiplier(p_old, p_new, params, eps);
  if (mult == 1.0) {
    return y_old;  // exact carry-over in the unchanged case
  }
  // gamma_two > 1 can push the multiplier below zero; production stays valid.
  return std::max(0.0, y_old * mult);
}

}  // namespace oligosim
