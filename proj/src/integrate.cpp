#include "picklab/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/expint.hpp>

namespace picklab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Local behavior of the integrand near tau: coef * s^power * e^(expinv/s),
// s = |t - tau|. log_power tracks an (ln(1/s))-type factor from PowerLog rates.
struct GClass {
  bool known = false;
  double expinv = 0.0;
  double power = 0.0;
  double log_power = 0.0;
  double coef = 1.0;
};

GClass integrand_class(const IntegrandSpec& g) {
  GClass cl;
  switch (g.kind) {
    case IntegrandSpec::Kind::InverseRate: {
      if (!g.rate->is_symbolic()) return cl;
      AsymClass a = g.rate->asym();
      cl = {true, a.expinv_rate, -a.power, -a.log_power, 1.0 / a.coef};
      break;
    }
    case IntegrandSpec::Kind::InversePower:
      cl = {true, 0.0, -g.exponent, 0.0, 1.0};
      break;
    case IntegrandSpec::Kind::ExpOver:
      cl = {true, g.coef, 0.0, 0.0, 1.0};
      break;
    case IntegrandSpec::Kind::PoissonTail:
      break;
  }
  return cl;
}

double expinv_antideriv(double s, double m) {
  // F with F' = e^(-m/s), m > 0.
  if (s <= 0.0) return 0.0;
  double x = m / s;
  if (x > 700.0) return 0.0;
  return s * std::exp(-x) + m * boost::math::expint(-x);
}

}  // namespace

IntegrandSpec IntegrandSpec::inverse_rate(RateFunction r, double tau) {
  IntegrandSpec g;
  g.kind = Kind::InverseRate;
  g.rate = std::move(r);
  g.tau = tau;
  return g;
}

IntegrandSpec IntegrandSpec::inverse_power(double exponent, double tau) {
  IntegrandSpec g;
  g.kind = Kind::InversePower;
  g.exponent = exponent;
  g.tau = tau;
  return g;
}

IntegrandSpec IntegrandSpec::exp_over(double coef, double tau) {
  IntegrandSpec g;
  g.kind = Kind::ExpOver;
  g.coef = coef;
  g.tau = tau;
  return g;
}

IntegrandSpec IntegrandSpec::poisson_tail() {
  IntegrandSpec g;
  g.kind = Kind::PoissonTail;
  return g;
}

double IntegrandSpec::value(double t) const {
  double s = std::abs(t - tau);
  switch (kind) {
    case Kind::InverseRate: {
      double v = rate->value(s);
      return v == 0.0 ? kInf : 1.0 / v;
    }
    case Kind::InversePower:
      return s == 0.0 ? kInf : std::pow(s, -exponent);
    case Kind::ExpOver:
      return s == 0.0 ? kInf : std::exp(coef / s);
    case Kind::PoissonTail:
      return t / (1.0 + t * t);
  }
  return 0.0;
}

double quad(const std::function<double(double)>& f, double a, double b) {
  if (a >= b) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 12, 1e-12);
}

double quad_piece(const DensityPiece& pc, const std::function<double(double)>& f,
                  double lo, double hi) {
  lo = std::max(lo, pc.a);
  hi = std::min(hi, pc.b);
  if (lo >= hi) return 0.0;
  auto integrand = [&](double t) { return pc.value(t) * f(t); };
  bool singular_center = pc.form == DensityPiece::Form::Power && pc.p < 0 &&
                         pc.center > lo && pc.center < hi;
  if (!singular_center) return quad(integrand, lo, hi);
  double total = 0.0;
  for (double side : {-1.0, 1.0}) {
    double extent = side < 0 ? pc.center - lo : hi - pc.center;
    if (extent <= 0) continue;
    double outer = extent;
    for (int k = 0; k < 64 && outer > 0; ++k) {
      double inner = extent * std::pow(0.5, k + 1);
      double a = pc.center + side * outer, b = pc.center + side * inner;
      double piece = quad(integrand, std::min(a, b), std::max(a, b));
      total += piece;
      if (std::abs(piece) < 1e-16 * (1.0 + std::abs(total))) break;
      outer = inner;
    }
  }
  return total;
}

namespace {

// Exact one-sided integral of a tau-centered density against the integrand
// class over distances [s1,s2]; falls back to quadrature when no elementary
// antiderivative applies. Returns +inf for a divergent side.
double side_value(const DensityPiece& pc, const GClass& g, double tau, bool left,
                  double s1, double s2) {
  if (s2 <= s1) return 0.0;
  double dens_p = pc.form == DensityPiece::Form::Power ? pc.p : 0.0;
  double dens_k = pc.form == DensityPiece::Form::ExpInv ? pc.k : 0.0;
  double a = g.expinv - dens_k;  // net exponential: e^(a/s)
  double e = dens_p + g.power;   // net power exponent
  if (a > 0 && s1 == 0.0) return kInf;
  if (a == 0 && g.log_power == 0.0) {
    if (s1 == 0.0 && e <= -1.0) return kInf;
    if (e == -1.0) return g.coef * pc.c * std::log(s2 / s1);
    return g.coef * pc.c * (std::pow(s2, e + 1.0) - std::pow(s1, e + 1.0)) / (e + 1.0);
  }
  if (a < 0 && e == 0.0 && g.log_power == 0.0)
    return g.coef * pc.c * (expinv_antideriv(s2, -a) - expinv_antideriv(s1, -a));
  // Remaining convergent shapes (decaying exponential times power, log factors):
  // numeric in distance coordinates; the integrand vanishes toward s = 0 when
  // a < 0, so plain adaptive quadrature suffices.
  auto f = [&](double s) {
    double t = left ? tau - s : tau + s;
    double gs = g.coef * std::pow(s, g.power) * (a == 0.0 ? 1.0 : std::exp(a / s));
    return pc.value(t) * gs;
  };
  if (a < 0) {
    // cut where the exponential has fully underflowed
    double cut = std::max(s1, -a / 745.0);
    if (cut >= s2) return 0.0;
    return quad(f, cut, s2);
  }
  return quad(f, std::max(s1, 1e-300), s2);
}

struct ShellResult {
  std::vector<double> contributions;
  double partial = 0.0;
};

ShellResult shell_contributions(const Measure& mu, const IntegrandSpec& g, double tau,
                                int k_max, double r0) {
  ShellResult res;
  GClass cl = integrand_class(g);
  res.contributions.assign(static_cast<size_t>(k_max) + 1, 0.0);
  for (int k = 0; k <= k_max; ++k) {
    double hi = r0 * std::pow(0.5, k);
    double lo = hi * 0.5;
    double ik = 0.0;
    for (const auto& at : mu.atoms()) {
      double s = std::abs(at.t - tau);
      if (s >= lo && s < hi) ik += at.w * g.value(at.t);
    }
    for (const auto& pc : mu.pieces()) {
      bool exact = pc.center == tau && cl.known && cl.log_power == 0.0;
      if (exact) {
        // per-side distance ranges within the piece, clipped to [lo,hi)
        double sl1 = std::max(lo, pc.b >= tau ? 0.0 : tau - pc.b);
        double sl2 = std::min(hi, pc.a <= tau ? tau - pc.a : 0.0);
        if (sl2 > sl1) ik += side_value(pc, cl, tau, true, sl1, sl2);
        double sr1 = std::max(lo, pc.a <= tau ? 0.0 : pc.a - tau);
        double sr2 = std::min(hi, pc.b >= tau ? pc.b - tau : 0.0);
        if (sr2 > sr1) ik += side_value(pc, cl, tau, false, sr1, sr2);
      } else {
        auto f = [&](double t) { return g.value(t); };
        ik += quad_piece(pc, f, tau - hi, tau - lo) + quad_piece(pc, f, tau + lo, tau + hi);
      }
    }
    res.contributions[static_cast<size_t>(k)] = ik;
    res.partial += ik;
  }
  return res;
}

IntegrabilityVerdict classify_shells(std::vector<double> shells, double partial,
                                     double tail_mass) {
  IntegrabilityVerdict v;
  v.shells = std::move(shells);
  std::vector<size_t> nonzero;
  for (size_t i = 0; i < v.shells.size(); ++i)
    if (v.shells[i] > 0.0) nonzero.push_back(i);
  if (nonzero.empty()) {
    v.tag = Tag::Integrable;
    v.estimate = 0.0;
    return v;
  }
  if (tail_mass == 0.0) {
    // no mass closer to tau than the innermost shell: the sum is exact
    v.tag = Tag::Integrable;
    v.estimate = partial;
    v.tail_bound = 0.0;
    return v;
  }
  if (partial > 1e12) {
    v.tag = Tag::Divergent;
    return v;
  }
  size_t n = nonzero.size();
  size_t look = std::min<size_t>(8, n);
  if (n >= 8) {
    bool nondecreasing = true;
    for (size_t j = n - look + 1; j < n; ++j)
      if (v.shells[nonzero[j]] < v.shells[nonzero[j - 1]]) { nondecreasing = false; break; }
    if (nondecreasing) {
      v.tag = Tag::Divergent;
      return v;
    }
    double rmax = 0.0;
    bool geometric = true;
    for (size_t j = n - look + 1; j < n; ++j) {
      double r = v.shells[nonzero[j]] / v.shells[nonzero[j - 1]];
      rmax = std::max(rmax, r);
      if (!(r <= 0.95)) { geometric = false; break; }
    }
    if (geometric) {
      double last = v.shells[nonzero.back()];
      v.tag = Tag::Integrable;
      v.tail_bound = last * rmax / (1.0 - rmax);
      v.estimate = partial + v.tail_bound;
      return v;
    }
  }
  v.tag = Tag::Inconclusive;
  return v;
}

}  // namespace

IntegrabilityVerdict shell_integrability(const Measure& mu, const IntegrandSpec& g,
                                         double tau, int k_max, double r0) {
  IntegrabilityVerdict v;
  if (g.singular() && mu.has_atom_at(tau)) {
    v.tag = Tag::Divergent;
    return v;
  }
  ShellResult sr = shell_contributions(mu, g, tau, k_max, r0);
  double tail_r = r0 * std::pow(0.5, k_max + 1);
  double tail_mass = mu.mass(tau - tail_r, tau + tail_r);
  return classify_shells(std::move(sr.contributions), sr.partial, tail_mass);
}

IntegrabilityVerdict shell_classify_function(const std::function<double(double)>& f,
                                             int k_max, double r0) {
  std::vector<double> shells(static_cast<size_t>(k_max) + 1, 0.0);
  double partial = 0.0;
  for (int k = 0; k <= k_max; ++k) {
    double hi = r0 * std::pow(0.5, k), lo = hi * 0.5;
    double ik = quad(f, lo, hi);
    shells[static_cast<size_t>(k)] = ik;
    partial += ik;
  }
  // Lebesgue tail is never exactly zero; pass any positive sentinel.
  return classify_shells(std::move(shells), partial, 1.0);
}

IntegrabilityVerdict integrate_against(const Measure& mu, const IntegrandSpec& g,
                                       double radius) {
  IntegrabilityVerdict v;
  if (g.kind == IntegrandSpec::Kind::PoissonTail) {
    v.tag = Tag::Integrable;
    v.symbolic = false;
    double est = 0.0;
    for (const auto& at : mu.atoms()) est += at.w * at.t / (1.0 + at.t * at.t);
    for (const auto& pc : mu.pieces())
      est += quad_piece(pc, [](double t) { return t / (1.0 + t * t); }, pc.a, pc.b);
    v.estimate = est;
    return v;
  }

  double tau = g.tau;
  Measure win = mu.restricted(tau - radius, tau + radius);
  if (win.has_atom_at(tau)) {
    v.tag = Tag::Divergent;
    return v;
  }

  GClass cl = integrand_class(g);
  bool symbolic_ok = cl.known && cl.log_power == 0.0;
  bool mismatch = false;
  for (const auto& pc : win.pieces()) {
    if (pc.touches(tau) && pc.center != tau) { mismatch = true; symbolic_ok = false; }
  }
  if (!symbolic_ok) {
    IntegrabilityVerdict nv = shell_integrability(win, g, tau, 48, radius);
    nv.center_mismatch_warning = mismatch;
    return nv;
  }

  v.symbolic = true;
  double est = 0.0;
  for (const auto& at : win.atoms()) {
    double s = std::abs(at.t - tau);
    if (s > 0.0 && s < radius) est += at.w * g.value(at.t);
  }
  for (const auto& pc : win.pieces()) {
    if (pc.center == tau) {
      double sl1 = pc.b >= tau ? 0.0 : tau - pc.b;
      double sl2 = pc.a <= tau ? tau - pc.a : 0.0;
      double sr1 = pc.a <= tau ? 0.0 : pc.a - tau;
      double sr2 = pc.b >= tau ? pc.b - tau : 0.0;
      double left = sl2 > sl1 ? side_value(pc, cl, tau, true, sl1, sl2) : 0.0;
      double right = sr2 > sr1 ? side_value(pc, cl, tau, false, sr1, sr2) : 0.0;
      if (std::isinf(left) || std::isinf(right)) {
        v.tag = Tag::Divergent;
        return v;
      }
      est += left + right;
    } else {
      // bounded integrand on this piece (it does not touch tau)
      est += quad_piece(pc, [&](double t) { return g.value(t); }, pc.a, pc.b);
    }
  }
  v.tag = Tag::Integrable;
  v.estimate = est;
  return v;
}

double signed_inverse_moment(const Measure& mu, double tau, int m, double radius) {
  Measure win = mu.restricted(tau - radius, tau + radius);
  if (win.has_atom_at(tau))
    throw Error(ErrorCode::MomentDivergent, "atom at the base point");
  double total = 0.0;
  for (const auto& at : win.atoms()) total += at.w * std::pow(at.t - tau, -m);
  for (const auto& pc : win.pieces()) {
    if (pc.center == tau &&
        (pc.form == DensityPiece::Form::Power || pc.form == DensityPiece::Form::Constant)) {
      double p = pc.form == DensityPiece::Form::Power ? pc.p : 0.0;
      double e = p - m;
      auto one_side = [&](double s1, double s2, double sign_factor) {
        if (s2 <= s1) return 0.0;
        if (s1 == 0.0 && e <= -1.0)
          throw Error(ErrorCode::MomentDivergent, "inverse moment diverges");
        return sign_factor * pc.c * (std::pow(s2, e + 1.0) - std::pow(s1, e + 1.0)) / (e + 1.0);
      };
      double sl1 = pc.b >= tau ? 0.0 : tau - pc.b;
      double sl2 = pc.a <= tau ? tau - pc.a : 0.0;
      double sr1 = pc.a <= tau ? 0.0 : pc.a - tau;
      double sr2 = pc.b >= tau ? pc.b - tau : 0.0;
      double parity = (m % 2 == 0) ? 1.0 : -1.0;  // (t - tau)^(-m) on the left side
      total += one_side(sl1, sl2, parity) + one_side(sr1, sr2, 1.0);
    } else if (pc.center == tau && pc.form == DensityPiece::Form::ExpInv) {
      auto f = [&](double t) { return std::pow(t - tau, -m); };
      double cut = pc.k / 745.0;
      total += quad_piece(pc, f, tau - radius, tau - cut) +
               quad_piece(pc, f, tau + cut, tau + radius);
    } else {
      if (pc.touches(tau)) {
        // off-center singular piece: dyadic slices toward tau on each side
        for (double side : {-1.0, 1.0}) {
          double extent = side < 0 ? tau - pc.a : pc.b - tau;
          if (extent <= 0) continue;
          double outer = extent;
          for (int k = 0; k < 64; ++k) {
            double inner = extent * std::pow(0.5, k + 1);
            double a = tau + side * outer, b = tau + side * inner;
            double part = quad_piece(pc, [&](double t) { return std::pow(t - tau, -m); },
                                     std::min(a, b), std::max(a, b));
            total += part;
            if (std::abs(part) < 1e-16 * (1.0 + std::abs(total))) break;
            outer = inner;
          }
        }
      } else {
        total += quad_piece(pc, [&](double t) { return std::pow(t - tau, -m); }, pc.a, pc.b);
      }
    }
  }
  return total;
}

double poisson_tail_integral(const Measure& mu, double lo, double hi) {
  double total = 0.0;
  for (const auto& at : mu.atoms())
    if (at.t >= lo && at.t <= hi) total += at.w * at.t / (1.0 + at.t * at.t);
  for (const auto& pc : mu.pieces())
    total += quad_piece(pc, [](double t) { return t / (1.0 + t * t); }, lo, hi);
  return total;
}

}  // namespace picklab
