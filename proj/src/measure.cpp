#include "picklab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/special_functions/expint.hpp>

namespace picklab {

double DensityPiece::value(double t) const {
  if (t < a || t > b) return 0.0;
  switch (form) {
    case Form::Constant:
      return c;
    case Form::Power:
      return c * std::pow(std::abs(t - center), p);
    case Form::ExpInv: {
      double d = std::abs(t - center);
      return d == 0.0 ? 0.0 : c * std::exp(-k / d);
    }
  }
  return 0.0;
}

namespace {

// Antiderivative of |s|^p on one side of 0 evaluated as F(v)-F(u), 0 <= u <= v.
double power_side(double c, double p, double u, double v) {
  double e = p + 1.0;
  return c * (std::pow(v, e) - std::pow(u, e)) / e;
}

// Integral of e^(-k/s) ds over 0 <= u <= v (distance coordinates).
double expinv_side(double c, double k, double u, double v) {
  auto F = [&](double s) {
    if (s <= 0.0) return 0.0;
    double x = k / s;
    if (x > 700.0) return 0.0;  // both terms underflow
    return s * std::exp(-x) + k * boost::math::expint(-x);
  };
  return c * (F(v) - F(u));
}

}  // namespace

double DensityPiece::integral(double u, double v) const {
  u = std::max(u, a);
  v = std::min(v, b);
  if (u >= v) return 0.0;
  if (form == Form::Constant) return c * (v - u);
  // Split at the center; integrate in distance coordinates on each side.
  double lo = u - center, hi = v - center;
  double total = 0.0;
  auto side = [&](double d0, double d1) {  // 0 <= d0 <= d1, distances from center
    if (d1 <= d0) return 0.0;
    return form == Form::Power ? power_side(c, p, d0, d1) : expinv_side(c, k, d0, d1);
  };
  if (lo < 0) total += side(std::max(0.0, -hi), -lo);
  if (hi > 0) total += side(std::max(0.0, lo), hi);
  return total;
}

Measure Measure::validated(std::vector<Atom> atoms, std::vector<DensityPiece> pieces) {
  for (const auto& at : atoms)
    if (at.w < 0) throw Error(ErrorCode::NegativeWeight, "atom weight must be nonnegative");
  for (const auto& pc : pieces) {
    if (pc.c < 0) throw Error(ErrorCode::NegativeWeight, "density coefficient must be nonnegative");
    if (pc.a > pc.b) throw Error(ErrorCode::InvalidArgument, "density support must satisfy a <= b");
    if (pc.form == DensityPiece::Form::Power && pc.p <= -1.0 && pc.touches(pc.center))
      throw Error(ErrorCode::NonIntegrableDensityExponent, "power density needs p > -1");
    if (pc.form == DensityPiece::Form::ExpInv && !(pc.k > 0))
      throw Error(ErrorCode::InvalidArgument, "expinv density needs k > 0");
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const DensityPiece& x, const DensityPiece& y) { return x.a < y.a; });
  for (size_t i = 1; i < pieces.size(); ++i)
    if (pieces[i].a < pieces[i - 1].b)
      throw Error(ErrorCode::OverlappingDensitySupports,
                  "density supports must have disjoint interiors");
  std::erase_if(atoms, [](const Atom& at) { return at.w == 0.0; });
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& x, const Atom& y) { return x.t < y.t; });
  Measure m;
  m.atoms_ = std::move(atoms);
  m.pieces_ = std::move(pieces);
  return m;
}

double Measure::mass(double a, double b) const {
  if (!(a < b)) throw Error(ErrorCode::InvalidArgument, "mass requires a < b");
  double total = 0.0;
  for (const auto& at : atoms_)
    if (at.t > a && at.t < b) total += at.w;
  for (const auto& pc : pieces_) total += pc.integral(a, b);
  return total;
}

double Measure::total_mass() const {
  double total = 0.0;
  for (const auto& at : atoms_) total += at.w;
  for (const auto& pc : pieces_) total += pc.integral(pc.a, pc.b);
  return total;
}

Measure Measure::restricted(double lo, double hi) const {
  Measure m;
  for (const auto& at : atoms_)
    if (at.t >= lo && at.t <= hi) m.atoms_.push_back(at);
  for (const auto& pc : pieces_) {
    double a = std::max(pc.a, lo), b = std::min(pc.b, hi);
    if (a < b) {
      DensityPiece clipped = pc;
      clipped.a = a;
      clipped.b = b;
      m.pieces_.push_back(clipped);
    }
  }
  return m;
}

Measure Measure::outside(double lo, double hi) const {
  Measure m;
  for (const auto& at : atoms_)
    if (at.t < lo || at.t > hi) m.atoms_.push_back(at);
  for (const auto& pc : pieces_) {
    if (pc.a < lo) {
      DensityPiece left = pc;
      left.b = std::min(pc.b, lo);
      if (left.a < left.b) m.pieces_.push_back(left);
    }
    if (pc.b > hi) {
      DensityPiece right = pc;
      right.a = std::max(pc.a, hi);
      if (right.a < right.b) m.pieces_.push_back(right);
    }
  }
  return m;
}

bool Measure::has_atom_at(double t) const {
  for (const auto& at : atoms_)
    if (at.t == t) return true;
  return false;
}

double Measure::support_distance(double tau) const {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& at : atoms_) d = std::min(d, std::abs(at.t - tau));
  for (const auto& pc : pieces_) {
    if (pc.touches(tau)) return 0.0;
    d = std::min(d, std::min(std::abs(pc.a - tau), std::abs(pc.b - tau)));
  }
  return d;
}

Measure operator+(const Measure& x, const Measure& y) {
  std::vector<Atom> atoms = x.atoms_;
  atoms.insert(atoms.end(), y.atoms_.begin(), y.atoms_.end());
  std::vector<DensityPiece> pieces = x.pieces_;
  pieces.insert(pieces.end(), y.pieces_.begin(), y.pieces_.end());
  return Measure::validated(std::move(atoms), std::move(pieces));
}

}  // namespace picklab
