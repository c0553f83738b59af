#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "picklab/integrate.hpp"
#include "picklab/measure.hpp"

namespace picklab {

using Complex = std::complex<double>;

// Herglotz data (a, b, mu) for f(z) = a + b z + ∫ (1/(t-z) - t/(1+t^2)) dmu(t),
// an analytic map of the upper half plane into its closure.
struct NevanlinnaRep {
  double a = 0.0;
  double b = 0.0;
  Measure mu;
};

// f = trivial + Cauchy transform of the reduced measure; the trivial part is
// analytic across (-1, 1).
struct Decomposition {
  NevanlinnaRep trivial;
  Measure reduced;
};

enum class LimitStatus { Finite, NoFiniteLimit, Inconclusive };

struct NontangentialValue {
  LimitStatus status = LimitStatus::Inconclusive;
  double value = 0.0;  // meaningful when Finite
};

struct BoundaryPolynomial {
  bool regular = false;
  int failing_moment = 0;          // smallest divergent inverse-moment order when !regular
  bool inconclusive = false;
  std::vector<double> coeffs;      // p_0 .. p_{2n-1} in powers of (z - tau)
};

Complex evaluate(const NevanlinnaRep& rep, Complex z);

// Cauchy transform ∫ 1/(t-z) dmu for mu supported in [-1, 1].
Complex evaluate_reduced(const Measure& mu, Complex z);

Decomposition decompose(const NevanlinnaRep& rep);

NontangentialValue nontangential_value(const NevanlinnaRep& rep, double tau);

// Boundary Taylor data of order 2n-1 at tau: after recentering,
//   p_0 = f(tau),  p_1 = b + ∫ (t-tau)^(-2) dmu,  p_k = ∫ (t-tau)^(-(k+1)) dmu,
// valid when |t-tau|^(-2n) is mu-integrable.
BoundaryPolynomial nontangential_polynomial(const NevanlinnaRep& rep, double tau, int n);

Complex polynomial_eval(const std::vector<double>& coeffs, double tau, Complex z);

// Rank-one perturbation transform F -> F/(1 + alpha F) for finite atomic mu
// with a = b = 0: the result is again finite atomic, atoms at the roots of
// 1 + alpha F = 0, weights 1/(alpha^2 F'(root)); the output's constant term is
// fixed so the functional identity holds exactly.
NevanlinnaRep aronszajn_krein(const NevanlinnaRep& rep, double alpha);

}  // namespace picklab
