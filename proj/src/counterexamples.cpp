#include "picklab/counterexamples.hpp"

#include <cmath>
#include <limits>

#include "picklab/julia.hpp"
#include "picklab/nevanlinna.hpp"

namespace picklab {

namespace {

constexpr int kMaxQuarterExponent = 500;  // 4^-500 is near the double floor

// Shared generator: separation condition
//   log2 gamma(t) - m * log2 lambda(t) >= n + 2 log2 n,  m = 2 (Julia) or 1 (value).
SpikeMeasure build(const RateFunction& gamma, const RateFunction& lambda, int N, int m) {
  if (N < 0) throw Error(ErrorCode::InvalidArgument, "N must be nonnegative");
  SpikeMeasure out;
  std::vector<Atom> atoms;
  int j = 0;  // exponent of the previous pick; t_n = 4^-j
  for (int n = 1; n <= N; ++n) {
    double need = n + 2.0 * std::log2(static_cast<double>(n));
    int jn = j + 1;  // enforces t_n <= t_{n-1}/2 on the quarter grid
    bool found = false;
    for (; jn <= kMaxQuarterExponent; ++jn) {
      double t = std::pow(4.0, -jn);
      double margin = gamma.log2_value(t) - m * lambda.log2_value(t);
      if (margin >= need) {
        found = true;
        break;
      }
    }
    if (!found) {
      out.truncated = true;
      break;
    }
    double t = std::pow(4.0, -jn);
    if (t == 0.0) {
      out.truncated = true;
      break;
    }
    double log2_w = gamma.log2_value(t) - 2.0 * std::log2(static_cast<double>(n));
    double w = std::exp2(log2_w);  // may underflow to 0; witness keeps the log value
    out.witnesses.push_back({n, t, w, log2_w});
    if (w > 0.0) atoms.push_back({t, w});
    j = jn;
  }
  out.mu = Measure::validated(std::move(atoms), {});
  return out;
}

}  // namespace

SpikeMeasure pitting_measure(const RateFunction& gamma, const RateFunction& lambda, int N) {
  AsymClass la = lambda.asym();
  if (!la.decays_faster_than(gamma.sqrt_asym()))
    throw Error(ErrorCode::HypothesisFailure, "approach rate must be o(sqrt(gauge))");
  return build(gamma, lambda, N, 2);
}

SpikeMeasure horocyclic_failure_measure(const RateFunction& gamma, const RateFunction& lambda,
                                        int N) {
  if (!lambda.is_o_of(gamma))
    throw Error(ErrorCode::HypothesisFailure, "approach rate must be o(gauge)");
  return build(gamma, lambda, N, 1);
}

std::vector<SeparationRow> verify_separation(const SpikeMeasure& sm,
                                             const RateFunction& lambda,
                                             SeparationMode mode) {
  int m = mode == SeparationMode::Julia ? 2 : 1;
  std::vector<SeparationRow> rows;

  // value-mode baseline f(0) = sum w/t (finite: w/t = gamma(t)/(t n^2) with
  // gamma superlinear), computable from surviving atoms
  double f0 = 0.0;
  if (mode == SeparationMode::Value)
    for (const auto& at : sm.mu.atoms()) f0 += at.w / at.t;

  for (const auto& wit : sm.witnesses) {
    SeparationRow row;
    row.n = wit.n;
    row.t = wit.t;
    row.log2_bound = wit.log2_w - m * lambda.log2_value(wit.t);
    if (row.log2_bound < wit.n)
      throw Error(ErrorCode::AssertionFailure,
                  "separation bound below 2^n at n = " + std::to_string(wit.n));
    double lam = lambda.value(wit.t);
    bool representable = wit.w > 0.0 && lam > 0.0 && row.log2_bound < 996.0;
    if (representable) {
      Complex z(wit.t, lam);
      if (mode == SeparationMode::Julia)
        row.direct = julia_quotient(sm.mu, z);
      else
        row.direct = std::abs(evaluate_reduced(sm.mu, z) - Complex(f0));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace picklab
