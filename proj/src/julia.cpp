#include "picklab/julia.hpp"

#include <cmath>
#include <limits>

#include <boost/math/special_functions/gamma.hpp>

#include "picklab/integrate.hpp"
#include "picklab/scan_util.hpp"

namespace picklab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;

double kernel_sum(const Measure& mu, double x, double y, double s) {
  double total = 0.0;
  if (s == 0.0) {
    for (const auto& at : mu.atoms()) {
      double dx = at.t - x;
      total += at.w / (dx * dx + y * y);
    }
    for (const auto& pc : mu.pieces())
      total += quad_piece(pc, [&](double t) {
        double dx = t - x;
        return 1.0 / (dx * dx + y * y);
      }, pc.a, pc.b);
  } else {
    for (const auto& at : mu.atoms()) {
      double dx = at.t - x;
      total += at.w * std::pow(dx * dx + y * y, -(s + 1.0));
    }
    for (const auto& pc : mu.pieces())
      total += quad_piece(pc, [&](double t) {
        double dx = t - x;
        return std::pow(dx * dx + y * y, -(s + 1.0));
      }, pc.a, pc.b);
  }
  return total;
}

// G(u) = ∫_0^u dv/(1+v^2)^(s+1), extended oddly; G(inf) in closed form.
double kernel_G(double u, double s) {
  if (s == 0.0) return std::atan(u);
  double sign = u < 0 ? -1.0 : 1.0;
  double au = std::abs(u);
  double head = quad([&](double v) { return std::pow(1.0 + v * v, -(s + 1.0)); },
                     0.0, std::min(au, 64.0));
  double tail = 0.0;
  if (au > 64.0) {
    // remaining piece in 1/v coordinates to keep the interval finite
    tail = quad([&](double w) {
      double v = 1.0 / w;
      return std::pow(1.0 + v * v, -(s + 1.0)) * v * v;
    }, 1.0 / au, 1.0 / 64.0);
  }
  return sign * (head + tail);
}

double kernel_G_inf(double s) {
  if (s == 0.0) return kPi / 2.0;
  return 0.5 * std::sqrt(kPi) * boost::math::tgamma(s + 0.5) / boost::math::tgamma(s + 1.0);
}

double prefactor(double s, bool legacy) {
  if (legacy) {
    if (s <= 0.0)
      throw Error(ErrorCode::InvalidArgument,
                  "legacy prefactor Gamma(s)^2 is undefined at s = 0");
    double g = boost::math::tgamma(s);
    return g * g;
  }
  double g = boost::math::tgamma(1.0 + s);
  return g * g;
}

}  // namespace

double julia_quotient(const NevanlinnaRep& rep, Complex z) {
  if (!(z.imag() > 0))
    throw Error(ErrorCode::NonUpperHalfPlaneArgument, "Julia quotient requires Im z > 0");
  return rep.b + kernel_sum(rep.mu, z.real(), z.imag(), 0.0);
}

double julia_quotient(const Measure& mu, Complex z) {
  return julia_quotient(NevanlinnaRep{0.0, 0.0, mu}, z);
}

double fractional_laplacian_jq(const Measure& mu, Complex z, double s, bool legacy_prefactor) {
  if (!(z.imag() > 0))
    throw Error(ErrorCode::NonUpperHalfPlaneArgument, "kernel quotient requires Im z > 0");
  if (s < 0.0) throw Error(ErrorCode::InvalidArgument, "kernel power s must be >= 0");
  return prefactor(s, legacy_prefactor) * kernel_sum(mu, z.real(), z.imag(), s);
}

bool stolz_membership(const StolzSpec& spec, Complex z) {
  if (!(z.imag() > 0))
    throw Error(ErrorCode::NonUpperHalfPlaneArgument, "membership requires Im z > 0");
  return z.imag() >= spec.lambda.value(std::abs(z.real() - spec.tau));
}

ArcDescriptor arc(const StolzSpec& spec, double d) {
  if (!(d > 0)) throw Error(ErrorCode::InvalidArgument, "arc depth must be positive");
  double h = spec.lambda.value(d);
  if (!(h > 0)) throw Error(ErrorCode::DegenerateArc, "lambda(d) must be positive");
  return {d, h, spec.tau - d, spec.tau + d};
}

double amortized_jq(const Measure& mu, const StolzSpec& spec, double d, double s) {
  ArcDescriptor cd = arc(spec, d);
  double y = cd.height, tau = spec.tau;
  double total = 0.0;
  if (s == 0.0) {
    for (const auto& at : mu.atoms())
      total += at.w * (std::atan((tau + d - at.t) / y) - std::atan((tau - d - at.t) / y));
    for (const auto& pc : mu.pieces())
      total += quad_piece(pc, [&](double t) {
        return std::atan((tau + d - t) / y) - std::atan((tau - d - t) / y);
      }, pc.a, pc.b);
    return total / (2.0 * d * y);
  }
  double pref = prefactor(s, false);
  double ypow = std::pow(y, 2.0 * s + 1.0);
  auto inner = [&](double t) {
    return (kernel_G((tau + d - t) / y, s) - kernel_G((tau - d - t) / y, s)) / ypow;
  };
  for (const auto& at : mu.atoms()) total += at.w * inner(at.t);
  for (const auto& pc : mu.pieces()) total += quad_piece(pc, inner, pc.a, pc.b);
  return pref * total / (2.0 * d);
}

AugurBounds augur_bounds(const Measure& mu, const StolzSpec& spec, double eps, double s) {
  if (!(eps > 0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  double y = spec.lambda.value(eps);
  if (!(y > 0)) throw Error(ErrorCode::DegenerateArc, "lambda(eps) must be positive");
  double tau = spec.tau;

  double L1, L2, C;
  if (s == 0.0) {
    L1 = kPi / 8.0;
    L2 = kPi;
    C = 4.0;
  } else {
    double pref = prefactor(s, false);
    L1 = pref * kernel_G(1.0, s) / 2.0;
    L2 = 2.0 * pref * kernel_G_inf(s);
    C = pref * std::pow(4.0, s + 1.0);
  }

  double denom = eps * std::pow(y, 2.0 * s + 1.0);
  AugurBounds out;
  out.lower = L1 * mu.mass(tau - eps, tau + eps) / denom;

  IntegrabilityVerdict moment =
      integrate_against(mu, IntegrandSpec::inverse_power(2.0 * s + 2.0, tau), 1.0);
  if (moment.tag != Tag::Integrable) {
    out.upper_infinite = true;
    out.upper = kInf;
    return out;
  }
  out.upper = L2 * mu.mass(tau - 2.0 * eps, tau + 2.0 * eps) / denom + C * moment.estimate;
  return out;
}

AjScan aj_scan(const Measure& mu, const StolzSpec& spec, const std::vector<double>& d_grid,
               double s) {
  for (size_t i = 1; i < d_grid.size(); ++i)
    if (!(d_grid[i] < d_grid[i - 1]))
      throw Error(ErrorCode::InvalidArgument, "d grid must be strictly descending");
  AjScan scan;
  std::vector<double> ajs;
  for (double d : d_grid) {
    AjRow row;
    row.d = d;
    row.lambda_d = spec.lambda.value(d);
    row.aj = amortized_jq(mu, spec, d, s);
    AugurBounds b = augur_bounds(mu, spec, d, s);
    row.lower = b.lower;
    row.upper = b.upper;
    row.upper_infinite = b.upper_infinite;
    ajs.push_back(row.aj);
    scan.rows.push_back(row);
  }
  scan.verdict = stabilization_verdict(ajs);
  return scan;
}

}  // namespace picklab
