#pragma once

#include <optional>
#include <vector>

#include "picklab/integrate.hpp"
#include "picklab/julia.hpp"
#include "picklab/nevanlinna.hpp"
#include "picklab/rate.hpp"
#include "picklab/scan_util.hpp"

namespace picklab {

// Search grid for the existential scale constant C: powers of four, 4^-8..4^8.
std::vector<double> default_c_grid();

struct RegularityReport {
  IntegrabilityVerdict verdict;
  std::optional<double> witness_C;  // present when Integrable
  double tau = 0.0;
};

// A rate is accepted as a regularity gauge when its leading behavior at 0
// vanishes at least superlinearly (strict power > 1, or exponentially flat).
bool gamma_admissible(const RateFunction& gamma);

// Is 1/gamma(C |t - tau|) mu-integrable near tau for some grid C?  The search
// starts at C = 1 and widens, so canonical witnesses are preferred.
RegularityReport gamma_regular(const Measure& mu, double tau, const RateFunction& gamma,
                               double radius = 1.0);

// Is t * lambda(C t) * gamma'(t) / gamma(t)^2 integrable on (0,1) for some
// grid C?  Searched from the largest C down, so the witness is the largest
// workable scale. Symbolic classification for symbolic pairs; log-domain
// dyadic-shell quadrature otherwise (and for the estimate).
RegularityReport is_augury(const RateFunction& lambda, const RateFunction& gamma);

// lambda(t) = mu((tau-2t, tau+2t)) / t tabulated on the grid, smoothed to its
// least monotone nondecreasing envelope, with an empirical vanishing-slope
// check feeding the tabulation's little-o flag. Requires |t-tau|^-2 to be
// mu-integrable.
RateFunction constructed_augury(const Measure& mu, double tau,
                                const std::vector<double>& t_grid);

struct OrderResult {
  int n_star = 0;                    // largest n <= n_max with |t-tau|^(-2n) integrable
  bool blocked_inconclusive = false; // search stopped on an Inconclusive moment
};

OrderResult order_of_regularity(const Measure& mu, double tau, int n_max);

enum class CurveKind { Horocyclic, SqrtHorocyclic };  // height D*g(Ct) vs sqrt(D*g(Ct))

struct LimsupRow {
  double t = 0.0;
  double height = 0.0;
  double j = 0.0;
  double running_max = 0.0;
};

struct LimsupScan {
  std::vector<LimsupRow> rows;
  ScanVerdict verdict = ScanVerdict::Inconclusive;
};

LimsupScan julia_limsup_scan(const NevanlinnaRep& rep, double tau, const RateFunction& gamma,
                             double C, double D, CurveKind curve,
                             const std::vector<double>& t_grid);

enum class HoroVerdict { DecreasingToZero, Unbounded, Inconclusive };

struct HoroRow {
  double D = 0.0;
  double sup_abs_dev = 0.0;
};

struct HoroScan {
  LimitStatus base_status = LimitStatus::Inconclusive;
  double f_tau = 0.0;
  std::vector<HoroRow> rows;
  HoroVerdict verdict = HoroVerdict::Inconclusive;
};

// Grid-sampled sup of |f(z) - f(tau)| over { Im z >= D*gamma(C|Re z - tau|) }
// ∩ B(tau, 1/D) for each D; at least 10^4 boundary-curve samples per region.
HoroScan horocyclic_scan(const NevanlinnaRep& rep, double tau, const RateFunction& gamma,
                         double C, const std::vector<double>& d_list);

// Is e^(C/|t-tau|) mu-integrable for some grid C?  Integrable means the
// moment problem of the associated function is analytically determined.
RegularityReport analytic_determinacy(const Measure& mu, double tau);

}  // namespace picklab
