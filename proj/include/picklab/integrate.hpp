#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "picklab/measure.hpp"
#include "picklab/rate.hpp"

namespace picklab {

// Singular integrands supported against a Measure. All are positive.
struct IntegrandSpec {
  enum class Kind {
    InverseRate,   // 1 / rate(|t - tau|)       (rate already carries any C scaling)
    InversePower,  // |t - tau|^(-exponent)
    ExpOver,       // e^(coef / |t - tau|)
    PoissonTail,   // t / (1 + t^2)  (bounded; tau ignored)
  } kind = Kind::InversePower;
  double tau = 0.0;
  std::optional<RateFunction> rate;
  double exponent = 1.0;
  double coef = 1.0;

  static IntegrandSpec inverse_rate(RateFunction r, double tau);
  static IntegrandSpec inverse_power(double exponent, double tau);
  static IntegrandSpec exp_over(double coef, double tau);
  static IntegrandSpec poisson_tail();

  double value(double t) const;
  bool singular() const { return kind != Kind::PoissonTail; }
};

struct IntegrabilityVerdict {
  Tag tag = Tag::Inconclusive;
  double estimate = 0.0;    // meaningful when Integrable
  double tail_bound = 0.0;  // remainder bound included in the estimate's accuracy
  std::vector<double> shells;  // per-shell contributions (numeric path; empty for symbolic)
  bool symbolic = false;
  bool center_mismatch_warning = false;
};

// Verdict for a possibly improper integral of g against mu over the window
// (tau - radius, tau + radius). Exact symbolic path when every density piece
// near tau is a Power/Constant/ExpInv form centered at tau and g's local
// class is known; dyadic-shell numeric fallback otherwise.
IntegrabilityVerdict integrate_against(const Measure& mu, const IntegrandSpec& g,
                                       double radius = 1.0);

// The numeric fallback, exposed directly: dyadic shells 2^(-k-1)r0 <= |t-tau| < 2^(-k)r0,
// k = 0..k_max, with exact or adaptive per-shell contributions, classified by
// the geometric-decay rule.
IntegrabilityVerdict shell_integrability(const Measure& mu, const IntegrandSpec& g,
                                         double tau, int k_max = 48, double r0 = 1.0);

// Same classifier applied to a plain nonnegative function on (0, r0] against
// Lebesgue measure (used for the augury integrals).
IntegrabilityVerdict shell_classify_function(const std::function<double(double)>& f,
                                             int k_max = 48, double r0 = 1.0);

// Signed inverse moment  ∫ (t - tau)^(-m) dmu  over the window; the caller is
// responsible for having established absolute convergence.
double signed_inverse_moment(const Measure& mu, double tau, int m, double radius = 1.0);

// ∫ t/(1+t^2) dmu over the given closed interval, exact atoms + quadrature.
double poisson_tail_integral(const Measure& mu, double lo, double hi);

// Adaptive Gauss-Kronrod on [a,b], relative tolerance ~1e-12.
double quad(const std::function<double(double)>& f, double a, double b);

// ∫ rho(t) f(t) dt over piece-support ∩ [lo,hi], splitting at a singular
// density center and summing dyadic slices toward it.
double quad_piece(const DensityPiece& pc, const std::function<double(double)>& f,
                  double lo, double hi);

}  // namespace picklab
