#pragma once

#include <optional>
#include <vector>

#include "picklab/common.hpp"

namespace picklab {

struct Atom {
  double t = 0.0;
  double w = 0.0;  // point mass w * delta_t, w >= 0
};

// Absolutely continuous piece on [a,b]. Forms:
//   Power:    c * |t - center|^p   (p > -1 for local integrability at the center)
//   Constant: c
//   ExpInv:   c * e^(-k/|t - center|)
struct DensityPiece {
  enum class Form { Power, Constant, ExpInv } form = Form::Constant;
  double a = 0.0, b = 0.0;
  double center = 0.0;
  double c = 0.0;
  double p = 0.0;  // Power only
  double k = 0.0;  // ExpInv only

  double value(double t) const;
  // Exact integral of the density over [u,v] (clipped to [a,b]); improper
  // across the center is handled by splitting.
  double integral(double u, double v) const;
  bool touches(double tau) const { return a <= tau && tau <= b; }
};

// Finite positive Borel measure on R: atoms plus density pieces with
// pairwise-disjoint interiors. Immutable once validated.
class Measure {
 public:
  Measure() = default;
  // Validates: nonnegative weights, p > -1, disjoint supports; sorts atoms
  // and drops zero-weight ones.
  static Measure validated(std::vector<Atom> atoms, std::vector<DensityPiece> pieces);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<DensityPiece>& pieces() const { return pieces_; }
  bool empty() const { return atoms_.empty() && pieces_.empty(); }

  // mu((a,b)) with the open-interval convention: atoms exactly at the
  // endpoints are excluded.
  double mass(double a, double b) const;
  double total_mass() const;

  // Restriction to the closed interval [lo,hi] (atoms at endpoints kept).
  Measure restricted(double lo, double hi) const;
  // Complementary part: everything strictly outside [lo,hi].
  Measure outside(double lo, double hi) const;

  bool has_atom_at(double t) const;
  // Smallest distance from tau to any mass (0 if a piece's support or an atom
  // touches tau); used to certify exact zero tails.
  double support_distance(double tau) const;

  friend Measure operator+(const Measure& x, const Measure& y);

 private:
  std::vector<Atom> atoms_;
  std::vector<DensityPiece> pieces_;
};

}  // namespace picklab
