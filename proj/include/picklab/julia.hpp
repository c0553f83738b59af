#pragma once

#include <vector>

#include "picklab/nevanlinna.hpp"
#include "picklab/rate.hpp"

namespace picklab {

// Boundary point tau plus the rate lambda whose graph bounds the approach
// region { Im z >= lambda(|Re z - tau|) }. A classical aperture-M region
// corresponds to lambda = Power(sqrt(M^2/(1-M^2)), 1).
struct StolzSpec {
  double tau = 0.0;
  RateFunction lambda;

  bool tangential() const { return lambda.is_little_o_of_t(); }
};

// Horizontal segment [tau-d, tau+d] x {lambda(d)}: the cross-cut of the
// approach region at depth d. Arclength is 2d.
struct ArcDescriptor {
  double d = 0.0;
  double height = 0.0;
  double lo = 0.0, hi = 0.0;
  double arclength() const { return 2.0 * d; }
};

// Im f(z) / Im z, computed through the exact kernel
//   b + ∫ dmu(t) / ((t-x)^2 + y^2),
// which agrees with Im f / Im z for every representation.
double julia_quotient(const NevanlinnaRep& rep, Complex z);
double julia_quotient(const Measure& mu, Complex z);  // b = 0 convenience

// Kernel-power variant: prefactor(s) * ∫ dmu / ((x-t)^2 + y^2)^(s+1), with
// prefactor Gamma(1+s)^2 so that s = 0 is the identity. The legacy flag
// substitutes Gamma(s)^2 instead (an alternative normalization kept for
// comparison; undefined at s = 0 and rejected there).
double fractional_laplacian_jq(const Measure& mu, Complex z, double s,
                               bool legacy_prefactor = false);

bool stolz_membership(const StolzSpec& spec, Complex z);

ArcDescriptor arc(const StolzSpec& spec, double d);

// Arclength average of the (fractional) quotient over the cross-cut at depth
// d: atoms use the arctan closed form at s = 0, everything else adaptive
// quadrature.
double amortized_jq(const Measure& mu, const StolzSpec& spec, double d, double s = 0.0);

struct AugurBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool upper_infinite = false;  // the inverse-moment term diverges
};

// Two-sided sandwich for the amortized quotient at eps:
//   L1(s) * mu(-eps,eps) / (eps lambda(eps)^(2s+1))  <=  AJ(eps)  <=
//   L2(s) * mu(-2eps,2eps) / (eps lambda(eps)^(2s+1)) + C(s) * ∫ |t-tau|^-(2s+2) dmu
// with L1(s) = G(1)Gamma(1+s)^2/2, L2(s) = 2G(inf)Gamma(1+s)^2,
// C(s) = 4^(s+1)Gamma(1+s)^2, G(u) = ∫_0^u dv/(1+v^2)^(s+1); at s = 0 these
// are pi/8, pi and 4.
AugurBounds augur_bounds(const Measure& mu, const StolzSpec& spec, double eps, double s = 0.0);

struct AjRow {
  double d = 0.0;
  double lambda_d = 0.0;
  double aj = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool upper_infinite = false;
};

struct AjScan {
  std::vector<AjRow> rows;
  ScanVerdict verdict = ScanVerdict::Inconclusive;
};

// One row per d (grid strictly descending); boundedness decided by the shared
// stabilization rule in scan_util.
AjScan aj_scan(const Measure& mu, const StolzSpec& spec, const std::vector<double>& d_grid,
               double s = 0.0);

}  // namespace picklab
