#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "picklab/common.hpp"

namespace picklab {

// Leading behavior as t -> 0+ of a rate function: coef * t^power * (ln(1/t))^log_power * e^(-expinv_rate/t).
struct AsymClass {
  double expinv_rate = 0.0;
  double power = 0.0;
  double log_power = 0.0;
  double coef = 1.0;

  // True when *this vanishes strictly faster than `other` at 0.
  bool decays_faster_than(const AsymClass& other) const;
  bool same_shape(const AsymClass& other) const;
};

// Symbolic monotone rate function on [0, t_max]; the gammas and lambdas of the
// boundary-regularity machinery. Immutable after construction.
class RateFunction {
 public:
  static RateFunction power(double c, double p);              // c * t^p, c>0, p>0
  static RateFunction expinv(double k);                       // e^(-k/t), k>0
  static RateFunction powerlog(double c, double p, double q); // c * t^p * (ln(1/t))^q
  static RateFunction scale(double s, RateFunction inner);    // inner(s*t), s>0
  static RateFunction min_of(RateFunction a, RateFunction b);
  // Monotone tabulation (t ascending, v nondecreasing); linear interpolation,
  // linear-through-zero extrapolation below the first knot.
  static RateFunction tabulated(std::vector<double> t, std::vector<double> v,
                                bool empirically_little_o_of_t);

  double value(double t) const;
  double log2_value(double t) const;  // exact in the log domain, safe far below underflow
  double derivative(double t) const;

  bool is_symbolic() const;  // false for tabulations
  AsymClass asym() const;    // throws IncomparableRates for tabulations
  bool is_o_of(const RateFunction& other) const;
  bool is_O_of(const RateFunction& other) const;
  bool is_little_o_of_t() const;  // symbolic when possible, else the tabulation's empirical flag
  AsymClass sqrt_asym() const;    // class of sqrt(this)

  std::string describe() const;

 private:
  struct Node;
  explicit RateFunction(std::shared_ptr<const Node> n);
  void validate() const;
  std::shared_ptr<const Node> node_;
};

}  // namespace picklab
