#pragma once

#include <utility>

namespace oligosim {

// Technology and behavior of a single firm. The exponents describe a
// constant-returns Cobb-Douglas technology (c + d = 1); the gammas scale how
// strongly production reacts to a change in the firm's own unit cost.
struct FirmParams {
  double c = 0.5;               // capital exponent, 0 < c < 1
  double d = 0.5;               // labor exponent, d = 1 - c
  double gamma_one = 0.0;       // expansion sensitivity after a cost drop
  double gamma_two = 0.0;       // contraction sensitivity after a cost rise
  double initial_buffer = 0.0;  // money reserve absorbing disposal losses

  // Throws std::invalid_argument if any invariant is violated.
  void validate() const;
};

// Normalized factor prices. Only p1 is stored; p2 is always 1 - p1, so the
// normalization holds exactly by construction.
class FactorPrices {
 public:
  explicit FactorPrices(double p1);

  double p1() const { return p1_; }
  double p2() const { return 1.0 - p1_; }

 private:
  double p1_;
};

enum class PriceMove { Lowered, Raised, Unchanged };

// Cost-minimizing input bundle for a given output level.
struct FactorDemands {
  double x1 = 0.0;  // capital
  double x2 = 0.0;  // labor
};

// Cobb-Douglas output x1^c * x2^d. Throws std::domain_error on negative
// inputs. Degree-1 homogeneous in (x1, x2).
double output(double x1, double x2, const FirmParams& params);

// Cheapest (x1, x2) producing exactly y at the given factor prices:
//   x1 = y * (c*p2 / (d*p1))^d,   x2 = y * (d*p1 / (c*p2))^c.
// Feeding the result back through output() recovers y, and the expenditure
// p1*x1 + p2*x2 equals y * unit_cost(). Throws std::domain_error if y < 0.
FactorDemands factor_demands(double y, double p1, double p2,
                             const FirmParams& params);
FactorDemands factor_demands(double y, const FactorPrices& prices,
                             const FirmParams& params);

// Minimum expenditure per unit of output, (p1/c)^c * (p2/d)^d. With selling
// prices set equal to production cost this is the firm's selling price. The
// raw overload accepts unnormalized price pairs (both must be positive).
double unit_cost(double p1, double p2, const FirmParams& params);
double unit_cost(const FactorPrices& prices, const FirmParams& params);

// Compares a new selling price against the previous one. Within eps the
// prices count as equal; eps makes the equality case well-defined under
// floating point.
PriceMove classify_price_move(double p_new, double p_old, double eps);

// Production multiplier implied by a price move:
//   Lowered:   1 + gamma_one * atan(p_old - p_new) / (pi/2)
//   Raised:    1 + gamma_two * atan(p_old - p_new) / (pi/2)
//   Unchanged: 1
// Always strictly inside (1 - gamma_two, 1 + gamma_one) for a finite gap.
double response_multiplier(double p_old, double p_new,
                           const FirmParams& params, double eps);

// New production level y_old * multiplier, clamped at 0 from below (the
// multiplier can go negative when gamma_two > 1). Throws std::domain_error
// if y_old < 0.
double production_response(double y_old, double p_old, double p_new,
                           const FirmParams& params, double eps);

}  // namespace oligosim
