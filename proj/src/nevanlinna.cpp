#include "picklab/nevanlinna.hpp"

#include <algorithm>
#include <cmath>

namespace picklab {

namespace {

constexpr double kGlobalRadius = 1e18;  // window treated as "all of R"

double poisson_term(double t) { return t / (1.0 + t * t); }

}  // namespace

Complex evaluate_reduced(const Measure& mu, Complex z) {
  if (!(z.imag() > 0))
    throw Error(ErrorCode::NonUpperHalfPlaneArgument, "evaluation requires Im z > 0");
  for (const auto& at : mu.atoms())
    if (at.t < -1.0 || at.t > 1.0)
      throw Error(ErrorCode::SupportViolation, "reduced measure must live in [-1,1]");
  for (const auto& pc : mu.pieces())
    if (pc.a < -1.0 || pc.b > 1.0)
      throw Error(ErrorCode::SupportViolation, "reduced measure must live in [-1,1]");
  Complex total = 0.0;
  for (const auto& at : mu.atoms()) total += at.w / (Complex(at.t) - z);
  for (const auto& pc : mu.pieces()) {
    if (pc.form == DensityPiece::Form::Constant) {
      total += pc.c * (std::log(Complex(pc.b) - z) - std::log(Complex(pc.a) - z));
    } else {
      double x = z.real(), y = z.imag();
      auto re_part = [&](double t) { return (t - x) / ((t - x) * (t - x) + y * y); };
      auto im_part = [&](double t) { return y / ((t - x) * (t - x) + y * y); };
      total += Complex(quad_piece(pc, re_part, pc.a, pc.b),
                       quad_piece(pc, im_part, pc.a, pc.b));
    }
  }
  return total;
}

Complex evaluate(const NevanlinnaRep& rep, Complex z) {
  if (!(z.imag() > 0))
    throw Error(ErrorCode::NonUpperHalfPlaneArgument, "evaluation requires Im z > 0");
  Complex total(rep.a, 0.0);
  total += rep.b * z;
  for (const auto& at : rep.mu.atoms())
    total += at.w * (1.0 / (Complex(at.t) - z) - poisson_term(at.t));
  for (const auto& pc : rep.mu.pieces()) {
    if (pc.form == DensityPiece::Form::Constant) {
      total += pc.c * (std::log(Complex(pc.b) - z) - std::log(Complex(pc.a) - z));
    } else {
      double x = z.real(), y = z.imag();
      total += Complex(quad_piece(pc, [&](double t) {
                         return (t - x) / ((t - x) * (t - x) + y * y);
                       }, pc.a, pc.b),
                       quad_piece(pc, [&](double t) {
                         return y / ((t - x) * (t - x) + y * y);
                       }, pc.a, pc.b));
    }
    total -= quad_piece(pc, poisson_term, pc.a, pc.b);
  }
  return total;
}

Decomposition decompose(const NevanlinnaRep& rep) {
  Decomposition d;
  d.reduced = rep.mu.restricted(-1.0, 1.0);
  d.trivial.b = rep.b;
  d.trivial.mu = rep.mu.outside(-1.0, 1.0);
  // the reduced part is a plain Cauchy transform; its Poisson correction
  // moves into the trivial part's constant
  d.trivial.a = rep.a - poisson_tail_integral(d.reduced, -1.0, 1.0);
  return d;
}

NontangentialValue nontangential_value(const NevanlinnaRep& rep, double tau) {
  NontangentialValue out;
  IntegrabilityVerdict v = integrate_against(rep.mu, IntegrandSpec::inverse_power(1.0, tau), 1.0);
  if (v.tag == Tag::Divergent) {
    out.status = LimitStatus::NoFiniteLimit;
    return out;
  }
  if (v.tag == Tag::Inconclusive) {
    out.status = LimitStatus::Inconclusive;
    return out;
  }
  out.status = LimitStatus::Finite;
  out.value = rep.a + rep.b * tau + signed_inverse_moment(rep.mu, tau, 1, kGlobalRadius) -
              poisson_tail_integral(rep.mu, -kGlobalRadius, kGlobalRadius);
  return out;
}

BoundaryPolynomial nontangential_polynomial(const NevanlinnaRep& rep, double tau, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "order parameter n must be >= 1");
  BoundaryPolynomial out;
  for (int m = 1; m <= 2 * n; ++m) {
    IntegrabilityVerdict v =
        integrate_against(rep.mu, IntegrandSpec::inverse_power(static_cast<double>(m), tau), 1.0);
    if (v.tag == Tag::Divergent) {
      out.failing_moment = m;
      return out;
    }
    if (v.tag == Tag::Inconclusive) {
      out.failing_moment = m;
      out.inconclusive = true;
      return out;
    }
  }
  out.regular = true;
  out.coeffs.resize(static_cast<size_t>(2 * n));
  out.coeffs[0] = rep.a + rep.b * tau + signed_inverse_moment(rep.mu, tau, 1, kGlobalRadius) -
                  poisson_tail_integral(rep.mu, -kGlobalRadius, kGlobalRadius);
  out.coeffs[1] = rep.b + signed_inverse_moment(rep.mu, tau, 2, kGlobalRadius);
  for (int k = 2; k <= 2 * n - 1; ++k)
    out.coeffs[static_cast<size_t>(k)] =
        signed_inverse_moment(rep.mu, tau, k + 1, kGlobalRadius);
  return out;
}

Complex polynomial_eval(const std::vector<double>& coeffs, double tau, Complex z) {
  Complex acc = 0.0, zp = 1.0;
  for (double c : coeffs) {
    acc += c * zp;
    zp *= (z - tau);
  }
  return acc;
}

namespace {

struct AtomicF {
  std::vector<Atom> atoms;  // sorted ascending

  // Borel transform ∫ dmu/(t-x): the object the rank-one perturbation acts
  // on. It vanishes at infinity, which is what preserves total mass under
  // F -> F/(1+alpha F).
  double F(double x) const {
    double s = 0.0;
    for (const auto& at : atoms) s += at.w / (at.t - x);
    return s;
  }
  double dF(double x) const {
    double s = 0.0;
    for (const auto& at : atoms) s += at.w / ((at.t - x) * (at.t - x));
    return s;
  }
};

double bisect_root(const AtomicF& f, double alpha, double lo, double hi) {
  auto H = [&](double x) { return 1.0 + alpha * f.F(x); };
  double hlo = H(lo), hhi = H(hi);
  for (int i = 0; i < 300 && hi - lo > 1e-16 * (1.0 + std::abs(lo) + std::abs(hi)); ++i) {
    double mid = 0.5 * (lo + hi);
    double hm = H(mid);
    if ((hm < 0) == (hlo < 0)) {
      lo = mid;
      hlo = hm;
    } else {
      hi = mid;
      hhi = hm;
    }
  }
  (void)hhi;
  return 0.5 * (lo + hi);
}

}  // namespace

NevanlinnaRep aronszajn_krein(const NevanlinnaRep& rep, double alpha) {
  if (alpha == 0.0) throw Error(ErrorCode::InvalidArgument, "alpha must be nonzero");
  if (rep.a != 0.0 || rep.b != 0.0 || !rep.mu.pieces().empty() || rep.mu.atoms().empty())
    throw Error(ErrorCode::UnsupportedRep,
                "rank-one transform requires a = b = 0 and a finite atomic measure");

  AtomicF f;
  f.atoms = rep.mu.atoms();
  auto H = [&](double x) { return 1.0 + alpha * f.F(x); };
  const double h_inf = 1.0;  // Borel transform vanishes at infinity
  size_t n = f.atoms.size();

  std::vector<double> roots;
  // one root in each gap between consecutive atoms (H runs from -sgn(alpha)inf
  // to +sgn(alpha)inf ... from one signed infinity to the other)
  for (size_t j = 0; j + 1 < n; ++j) {
    double tl = f.atoms[j].t, tr = f.atoms[j + 1].t;
    double gap = tr - tl;
    // shrink toward each pole until the pole-side signs appear
    double lo = tl + gap * 0.5, hi = tr - gap * 0.5;
    double want_lo = alpha > 0 ? -1.0 : 1.0;  // sign of H just right of a pole
    for (int k = 1; k < 400 && !((H(lo) < 0) == (want_lo < 0)); ++k)
      lo = tl + gap * std::pow(0.5, k + 1);
    for (int k = 1; k < 400 && !((H(hi) < 0) == (want_lo > 0)); ++k)
      hi = tr - gap * std::pow(0.5, k + 1);
    roots.push_back(bisect_root(f, alpha, lo, hi));
  }
  // exactly one root outside the atom range, on the side where H crosses h_inf
  {
    bool root_right = (alpha > 0) == (h_inf > 0);
    if (root_right) {
      double tl = f.atoms[n - 1].t;
      double lo = tl + 1.0, hi = tl + 1.0;
      double want_lo = alpha > 0 ? -1.0 : 1.0;
      for (int k = 0; k < 400 && !((H(lo) < 0) == (want_lo < 0)); ++k)
        lo = tl + std::pow(0.5, k + 1);
      for (int k = 0; k < 2000 && !((H(hi) < 0) == (h_inf < 0)); ++k)
        hi = tl + std::pow(2.0, k + 1);
      roots.push_back(bisect_root(f, alpha, lo, hi));
    } else {
      double tr = f.atoms[0].t;
      double hi = tr - 1.0, lo = tr - 1.0;
      double want_hi = alpha > 0 ? 1.0 : -1.0;  // sign of H just left of a pole
      for (int k = 0; k < 400 && !((H(hi) < 0) == (want_hi < 0)); ++k)
        hi = tr - std::pow(0.5, k + 1);
      for (int k = 0; k < 2000 && !((H(lo) < 0) == (h_inf < 0)); ++k)
        lo = tr - std::pow(2.0, k + 1);
      roots.push_back(bisect_root(f, alpha, lo, hi));
    }
  }
  std::sort(roots.begin(), roots.end());

  std::vector<Atom> out_atoms;
  for (double x : roots) out_atoms.push_back({x, 1.0 / (alpha * alpha * f.dF(x))});
  NevanlinnaRep out;
  out.mu = Measure::validated(out_atoms, {});
  // set the constant so evaluate(out, z) equals the Borel transform of the new
  // measure, which by partial fractions is exactly F/(1+alpha F)
  for (const auto& at : out.mu.atoms()) out.a += at.w * at.t / (1.0 + at.t * at.t);
  return out;
}

}  // namespace picklab
