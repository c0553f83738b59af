#include "picklab/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace picklab {

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kInf = std::numeric_limits<double>::infinity();

// d(log2 gamma)/dt by central differences of the log-domain value; stable far
// below linear-domain underflow.
double log2_slope(const RateFunction& g, double t) {
  double h = t * 1e-6;
  return (g.log2_value(t + h) - g.log2_value(t - h)) / (2.0 * h);
}

// log2 of the augury integrand t * lambda(C t) * gamma'(t) / gamma(t)^2,
// assembled entirely in the log domain:
//   gamma'/gamma^2 = (ln 2 * dlog2gamma/dt) / gamma.
double log2_integrand(const RateFunction& lambda, const RateFunction& gamma, double C,
                      double t) {
  double lam = lambda.log2_value(C * t);
  if (lam == -kInf) return -kInf;
  double slope = log2_slope(gamma, t);
  if (!(slope > 0)) return -kInf;
  return std::log2(t) + lam + std::log2(kLn2 * slope) - gamma.log2_value(t);
}

double integrand_value(const RateFunction& lambda, const RateFunction& gamma, double C,
                       double t) {
  double l2 = log2_integrand(lambda, gamma, C, t);
  if (l2 > 1000.0) return kInf;
  return std::exp2(l2);
}

// Leading class of the augury integrand; only valid for symbolic pairs.
// Returns (decay A, power P, log Q): integrand ~ t^P ln(1/t)^Q e^(-A/t).
struct IntegrandClass {
  double A, P, Q;
};

IntegrandClass augury_class(const RateFunction& lambda, const RateFunction& gamma, double C) {
  AsymClass la = lambda.asym();
  AsymClass ga = gamma.asym();
  double A = la.expinv_rate / C - ga.expinv_rate;
  double gp_power = ga.expinv_rate > 0 ? ga.power - 2.0 : ga.power - 1.0;
  double P = 1.0 + la.power + gp_power - 2.0 * ga.power;
  double Q = la.log_power - ga.log_power;
  return {A, P, Q};
}

Tag classify_augury_class(const IntegrandClass& cl) {
  if (cl.A > 0) return Tag::Integrable;
  if (cl.A < 0) return Tag::Divergent;
  if (cl.P > -1.0) return Tag::Integrable;
  if (cl.P < -1.0) return Tag::Divergent;
  return cl.Q < -1.0 ? Tag::Integrable : Tag::Divergent;
}

}  // namespace

std::vector<double> default_c_grid() {
  std::vector<double> g;
  for (int k = -8; k <= 8; ++k) g.push_back(std::pow(4.0, k));
  return g;
}

bool gamma_admissible(const RateFunction& gamma) {
  if (!gamma.is_symbolic()) return false;
  AsymClass a = gamma.asym();
  return a.expinv_rate > 0 || a.power > 1.0;
}

RegularityReport gamma_regular(const Measure& mu, double tau, const RateFunction& gamma,
                               double radius) {
  if (!gamma_admissible(gamma))
    throw Error(ErrorCode::GammaNotAdmissible,
                "gauge must be symbolic with superlinear decay at 0");
  RegularityReport rep;
  rep.tau = tau;
  // canonical scale first, then widening, then narrowing
  std::vector<int> order;
  for (int k = 0; k <= 8; ++k) order.push_back(k);
  for (int k = -1; k >= -8; --k) order.push_back(k);
  bool saw_inconclusive = false;
  IntegrabilityVerdict last;
  for (int k : order) {
    double C = std::pow(4.0, k);
    RateFunction scaled = RateFunction::scale(C, gamma);
    IntegrabilityVerdict v =
        integrate_against(mu, IntegrandSpec::inverse_rate(scaled, tau), radius);
    if (v.tag == Tag::Integrable) {
      rep.verdict = v;
      rep.witness_C = C;
      return rep;
    }
    if (v.tag == Tag::Inconclusive) saw_inconclusive = true;
    last = v;
  }
  rep.verdict = last;
  rep.verdict.tag = saw_inconclusive ? Tag::Inconclusive : Tag::Divergent;
  return rep;
}

RegularityReport is_augury(const RateFunction& lambda, const RateFunction& gamma) {
  if (!lambda.is_little_o_of_t())
    throw Error(ErrorCode::LambdaNotLittleO, "approach rate must be o(t)");
  if (!gamma_admissible(gamma))
    throw Error(ErrorCode::GammaNotAdmissible,
                "gauge must be symbolic with superlinear decay at 0");
  RegularityReport rep;
  bool symbolic = lambda.is_symbolic();
  bool saw_inconclusive = false;
  // largest workable scale wins: search downward
  for (int k = 8; k >= -8; --k) {
    double C = std::pow(4.0, k);
    auto h = [&](double t) { return integrand_value(lambda, gamma, C, t); };
    if (symbolic) {
      IntegrandClass cl = augury_class(lambda, gamma, C);
      if (classify_augury_class(cl) != Tag::Integrable) continue;
      IntegrabilityVerdict v = shell_classify_function(h);
      v.tag = Tag::Integrable;  // verdict is symbolic; shells provide the estimate
      v.symbolic = true;
      rep.verdict = v;
      rep.witness_C = C;
      return rep;
    }
    IntegrabilityVerdict v = shell_classify_function(h);
    if (v.tag == Tag::Integrable) {
      rep.verdict = v;
      rep.witness_C = C;
      return rep;
    }
    if (v.tag == Tag::Inconclusive) saw_inconclusive = true;
  }
  rep.verdict.tag = (!symbolic && saw_inconclusive) ? Tag::Inconclusive : Tag::Divergent;
  return rep;
}

RateFunction constructed_augury(const Measure& mu, double tau,
                                const std::vector<double>& t_grid) {
  IntegrabilityVerdict pre =
      integrate_against(mu, IntegrandSpec::inverse_power(2.0, tau), 1.0);
  if (pre.tag != Tag::Integrable)
    throw Error(ErrorCode::HypothesisFailure,
                "construction needs the inverse-square moment to be finite");
  std::vector<double> ts(t_grid.begin(), t_grid.end());
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<double> vs;
  vs.reserve(ts.size());
  for (double t : ts) vs.push_back(mu.mass(tau - 2.0 * t, tau + 2.0 * t) / t);
  // least monotone nondecreasing envelope
  for (size_t i = 1; i < vs.size(); ++i) vs[i] = std::max(vs[i], vs[i - 1]);
  // empirical o(t): the slope v/t must shrink toward the fine end of the grid
  bool little_o = true;
  if (!ts.empty() && vs.back() > 0.0) {
    double r_fine = vs.front() / ts.front();
    double r_max = 0.0;
    for (size_t i = 0; i < ts.size(); ++i) r_max = std::max(r_max, vs[i] / ts[i]);
    little_o = r_max == 0.0 || r_fine <= 0.5 * r_max;
  }
  return RateFunction::tabulated(std::move(ts), std::move(vs), little_o);
}

OrderResult order_of_regularity(const Measure& mu, double tau, int n_max) {
  OrderResult out;
  for (int n = 1; n <= n_max; ++n) {
    IntegrabilityVerdict v =
        integrate_against(mu, IntegrandSpec::inverse_power(2.0 * n, tau), 1.0);
    if (v.tag == Tag::Integrable) {
      out.n_star = n;
      continue;
    }
    out.blocked_inconclusive = v.tag == Tag::Inconclusive;
    break;
  }
  return out;
}

LimsupScan julia_limsup_scan(const NevanlinnaRep& rep, double tau, const RateFunction& gamma,
                             double C, double D, CurveKind curve,
                             const std::vector<double>& t_grid) {
  LimsupScan scan;
  std::vector<double> js;
  double rm = 0.0;
  for (double t : t_grid) {
    double g = gamma.value(C * std::abs(t));
    double h = curve == CurveKind::Horocyclic ? D * g : std::sqrt(D * g);
    if (!(h > 0)) throw Error(ErrorCode::DegenerateArc, "curve height must be positive");
    double j = julia_quotient(rep, Complex(tau + t, h));
    rm = std::max(rm, j);
    scan.rows.push_back({t, h, j, rm});
    js.push_back(j);
  }
  scan.verdict = stabilization_verdict(js);
  return scan;
}

HoroScan horocyclic_scan(const NevanlinnaRep& rep, double tau, const RateFunction& gamma,
                         double C, const std::vector<double>& d_list) {
  HoroScan scan;
  NontangentialValue ntv = nontangential_value(rep, tau);
  scan.base_status = ntv.status;
  if (ntv.status != LimitStatus::Finite) return scan;
  scan.f_tau = ntv.value;

  constexpr int kSamplesPerSide = 5000;
  for (double D : d_list) {
    double radius = 1.0 / D;
    double sup = 0.0;
    for (int i = 0; i < kSamplesPerSide; ++i) {
      // log-spaced |t| from radius down through 8 decades
      double t = radius * std::pow(10.0, -8.0 * i / (kSamplesPerSide - 1.0));
      double h = D * gamma.value(C * t);
      if (!(h > 0)) continue;
      if (t * t + h * h > radius * radius) continue;  // stay inside B(tau, 1/D)
      for (double side : {-1.0, 1.0}) {
        Complex z(tau + side * t, h);
        double dev = std::abs(evaluate(rep, z) - Complex(scan.f_tau));
        sup = std::max(sup, dev);
      }
    }
    scan.rows.push_back({D, sup});
  }

  bool finite = true;
  for (const auto& r : scan.rows)
    if (!(r.sup_abs_dev < 1e9)) finite = false;
  if (!finite) {
    scan.verdict = HoroVerdict::Unbounded;
  } else if (!scan.rows.empty()) {
    double first = scan.rows.front().sup_abs_dev;
    double last = scan.rows.back().sup_abs_dev;
    if (first == 0.0 && last == 0.0)
      scan.verdict = HoroVerdict::DecreasingToZero;
    else if (last <= 1e-3 * first)
      scan.verdict = HoroVerdict::DecreasingToZero;
    else
      scan.verdict = HoroVerdict::Inconclusive;
  }
  return scan;
}

RegularityReport analytic_determinacy(const Measure& mu, double tau) {
  RegularityReport rep;
  rep.tau = tau;
  bool saw_inconclusive = false;
  for (int k = 8; k >= -8; --k) {
    double C = std::pow(4.0, k);
    IntegrabilityVerdict v =
        integrate_against(mu, IntegrandSpec::exp_over(C, tau), 1.0);
    if (v.tag == Tag::Integrable && std::isfinite(v.estimate)) {
      rep.verdict = v;
      rep.witness_C = C;
      return rep;
    }
    if (v.tag == Tag::Inconclusive) saw_inconclusive = true;
  }
  rep.verdict.tag = saw_inconclusive ? Tag::Inconclusive : Tag::Divergent;
  return rep;
}

}  // namespace picklab
