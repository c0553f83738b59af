#pragma once

#include <optional>
#include <vector>

#include "picklab/measure.hpp"
#include "picklab/rate.hpp"

namespace picklab {

struct SpikeWitness {
  int n = 0;
  double t = 0.0;        // atom location
  double w = 0.0;        // linear-domain weight (0 when underflowed)
  double log2_w = 0.0;   // exact log-domain weight gamma(t)/n^2
};

struct SpikeMeasure {
  Measure mu;                         // atoms whose weights survive in doubles
  std::vector<SpikeWitness> witnesses;
  bool truncated = false;             // grid exhausted before N atoms
};

// Atoms (t_n, gamma(t_n)/n^2) with gamma(t_n)/lambda(t_n)^2 >= 2^n n^2, so the
// quotient spikes like 2^n above each atom while the measure stays
// gamma-integrable (sum 1/n^2). t_n is the largest quarter-grid point 4^-j
// satisfying the inequality with t_n <= t_{n-1}/2. Requires lambda = o(sqrt(gamma)).
SpikeMeasure pitting_measure(const RateFunction& gamma, const RateFunction& lambda, int N);

// Same construction with the weaker separation gamma(t_n)/lambda(t_n) >= 2^n n^2,
// driving |f(t_n + i lambda(t_n)) - f(0)| ~ 2^n. Requires lambda = o(gamma).
SpikeMeasure horocyclic_failure_measure(const RateFunction& gamma, const RateFunction& lambda,
                                        int N);

enum class SeparationMode { Julia, Value };

struct SeparationRow {
  int n = 0;
  double t = 0.0;
  double log2_bound = 0.0;              // log2 of the guaranteed lower bound
  std::optional<double> direct;         // cross-check value while representable
};

// Asserts log2(w_n / lambda(t_n)^2) >= n (Julia mode) or
// log2(w_n / lambda(t_n)) >= n (Value mode), working entirely in the log
// domain; cross-checks against direct kernel / Cauchy-transform evaluation
// while both stay below 1e300.
std::vector<SeparationRow> verify_separation(const SpikeMeasure& sm,
                                             const RateFunction& lambda,
                                             SeparationMode mode);

}  // namespace picklab
