#include <doctest.h>

#include <cmath>
#include <random>

#include "picklab/integrate.hpp"
#include "picklab/julia.hpp"

using namespace picklab;

namespace {

constexpr double kPi = 3.14159265358979323846;

Measure atoms(std::vector<Atom> as) { return Measure::validated(std::move(as), {}); }

Measure lebesgue(double a, double b, double c = 1.0) {
  DensityPiece pc;
  pc.form = DensityPiece::Form::Constant;
  pc.c = c;
  pc.a = a;
  pc.b = b;
  return Measure::validated({}, {pc});
}

StolzSpec parabolic(double tau = 0.0) { return {tau, RateFunction::power(1.0, 2.0)}; }

}  // namespace

TEST_CASE("julia quotient: kernel oracles") {
  // single unit atom at 0.5 seen from i: 1/((0.5)^2 + 1) = 0.8
  CHECK(julia_quotient(atoms({{0.5, 1.0}}), {0.0, 1.0}) == doctest::Approx(0.8).epsilon(1e-14));
  // slope b adds directly
  CHECK(julia_quotient(NevanlinnaRep{3.0, 2.0, atoms({{0.5, 1.0}})}, {0.0, 1.0}) ==
        doctest::Approx(2.8).epsilon(1e-14));
  // Lebesgue on (-1,1) from x+iy: (atan((1-x)/y) - atan((-1-x)/y))/y
  double y = 0.5;
  CHECK(julia_quotient(lebesgue(-1.0, 1.0), {0.0, y}) ==
        doctest::Approx(2.0 * std::atan(2.0) / y).epsilon(1e-10));
  CHECK_THROWS_AS(julia_quotient(atoms({{0.0, 1.0}}), {0.0, -1.0}), Error);
}

TEST_CASE("julia quotient equals Im f / Im z") {
  NevanlinnaRep rep{-0.7, 0.3, atoms({{-1.5, 0.4}, {0.2, 1.1}}) + lebesgue(0.5, 2.0, 0.6)};
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> xr(-3.0, 3.0), yr(0.05, 2.0);
  for (int i = 0; i < 50; ++i) {
    Complex z(xr(rng), yr(rng));
    double lhs = julia_quotient(rep, z);
    double rhs = evaluate(rep, z).imag() / z.imag();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("julia quotient is additive and positive") {
  Measure m1 = atoms({{0.3, 2.0}});
  Measure m2 = lebesgue(-1.0, 0.0);
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> xr(-2.0, 2.0), yr(0.1, 2.0);
  for (int i = 0; i < 30; ++i) {
    Complex z(xr(rng), yr(rng));
    double j1 = julia_quotient(m1, z), j2 = julia_quotient(m2, z);
    CHECK(j1 > 0.0);
    CHECK(j2 > 0.0);
    CHECK(julia_quotient(m1 + m2, z) == doctest::Approx(j1 + j2).epsilon(1e-12));
  }
}

TEST_CASE("fractional kernel quotient: s = 0 is the identity") {
  Measure m = atoms({{0.5, 1.0}, {-0.2, 0.7}}) + lebesgue(0.0, 1.0);
  for (Complex z : {Complex(0.0, 1.0), Complex(0.3, 0.2), Complex(-1.0, 0.5)})
    CHECK(fractional_laplacian_jq(m, z, 0.0) ==
          doctest::Approx(julia_quotient(m, z)).epsilon(1e-12));
}

TEST_CASE("fractional kernel quotient: s = 1 oracles") {
  // Gamma(2)^2 = 1; unit atom at 0 from i: (0 + 1)^-2 = 1
  CHECK(fractional_laplacian_jq(atoms({{0.0, 1.0}}), {0.0, 1.0}, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  // from 2i: (0 + 4)^-2 = 1/16
  CHECK(fractional_laplacian_jq(atoms({{0.0, 1.0}}), {0.0, 2.0}, 1.0) ==
        doctest::Approx(0.0625).epsilon(1e-14));
}

TEST_CASE("fractional kernel quotient: prefactor conventions") {
  Measure m = atoms({{0.2, 1.0}});
  Complex z(0.0, 0.5);
  // at s = 1 both conventions give Gamma-squared factor 1
  CHECK(fractional_laplacian_jq(m, z, 1.0, true) ==
        doctest::Approx(fractional_laplacian_jq(m, z, 1.0, false)).epsilon(1e-14));
  // Gamma(1+s)^2 = s^2 Gamma(s)^2
  double s = 0.5;
  CHECK(fractional_laplacian_jq(m, z, s, false) ==
        doctest::Approx(s * s * fractional_laplacian_jq(m, z, s, true)).epsilon(1e-12));
  CHECK_THROWS_AS(fractional_laplacian_jq(m, z, 0.0, true), Error);
  CHECK_THROWS_AS(fractional_laplacian_jq(m, z, -1.0), Error);
}

TEST_CASE("approach region membership and cross-cut arcs") {
  StolzSpec cone{0.0, RateFunction::power(1.0, 1.0)};  // Im z >= |Re z|
  CHECK(stolz_membership(cone, {0.5, 0.5}));
  CHECK(stolz_membership(cone, {0.5, 0.9}));
  CHECK(!stolz_membership(cone, {0.5, 0.4}));
  CHECK(!cone.tangential());

  StolzSpec par = parabolic();
  CHECK(par.tangential());
  CHECK(stolz_membership(par, {0.5, 0.26}));
  CHECK(!stolz_membership(par, {0.5, 0.24}));

  ArcDescriptor a = arc(par, 0.1);
  CHECK(a.height == doctest::Approx(0.01).epsilon(1e-14));
  CHECK(a.lo == doctest::Approx(-0.1));
  CHECK(a.hi == doctest::Approx(0.1));
  CHECK(a.arclength() == doctest::Approx(0.2));

  CHECK_THROWS_AS(arc(par, 0.0), Error);
  // a rate that vanishes on an interval gives a degenerate cross-cut
  StolzSpec flat{0.0, RateFunction::tabulated({0.1, 0.2}, {0.0, 0.1}, false)};
  CHECK_THROWS_AS(arc(flat, 0.05), Error);
}

TEST_CASE("amortized quotient: atom arctan oracle") {
  // unit atom at 0, parabolic region, d = 0.1, y = 0.01:
  // AJ = (1/(2 d y)) [atan(d/y) - atan(-d/y)] = 1000 atan(10)
  double aj = amortized_jq(atoms({{0.0, 1.0}}), parabolic(), 0.1);
  CHECK(aj == doctest::Approx(1000.0 * std::atan(10.0)).epsilon(1e-12));
  // empty measure averages to zero
  CHECK(amortized_jq(Measure(), parabolic(), 0.1) == 0.0);
}

TEST_CASE("amortized quotient agrees with direct arc averaging") {
  Measure m = atoms({{0.0, 1.0}, {0.3, 0.5}}) + lebesgue(-0.5, 0.5, 0.25);
  for (auto spec : {parabolic(), StolzSpec{0.1, RateFunction::power(0.5, 1.0)}}) {
    for (double d : {0.4, 0.1, 0.025}) {
      ArcDescriptor a = arc(spec, d);
      double brute = quad([&](double x) {
        return julia_quotient(m, Complex(x, a.height));
      }, a.lo, a.hi) / a.arclength();
      CHECK(amortized_jq(m, spec, d) == doctest::Approx(brute).epsilon(1e-8));
    }
  }
}

TEST_CASE("amortized quotient for s > 0 agrees with direct arc averaging") {
  Measure m = atoms({{0.0, 1.0}, {-0.2, 0.5}});
  StolzSpec spec = parabolic();
  for (double s : {0.5, 1.0, 2.0}) {
    for (double d : {0.2, 0.05}) {
      ArcDescriptor a = arc(spec, d);
      double brute = quad([&](double x) {
        return fractional_laplacian_jq(m, Complex(x, a.height), s);
      }, a.lo, a.hi) / a.arclength();
      CHECK(amortized_jq(m, spec, d, s) == doctest::Approx(brute).epsilon(1e-7));
    }
  }
}

TEST_CASE("sandwich bounds: exact constants at s = 0") {
  Measure m = atoms({{0.0, 1.0}});
  StolzSpec spec = parabolic();
  double eps = 0.1, y = 0.01;
  AugurBounds b = augur_bounds(m, spec, eps);
  CHECK(b.lower == doctest::Approx(kPi / 8.0 * 1.0 / (eps * y)).epsilon(1e-12));
  // atom at tau makes the inverse-moment term diverge
  CHECK(b.upper_infinite);
  CHECK(std::isinf(b.upper));

  // atom away from tau: window masses vanish for small eps, moment is finite
  AugurBounds c = augur_bounds(atoms({{0.5, 2.0}}), spec, 0.1);
  CHECK(c.lower == 0.0);
  CHECK(!c.upper_infinite);
  CHECK(c.upper == doctest::Approx(4.0 * 2.0 / std::pow(0.5, 2.0)).epsilon(1e-12));
}

TEST_CASE("sandwich bounds trap the amortized quotient") {
  StolzSpec spec = parabolic();
  std::vector<Measure> cases = {
      atoms({{0.0, 1.0}}),
      atoms({{0.05, 0.5}, {-0.3, 1.0}}),
      atoms({{0.02, 0.3}, {0.2, 0.3}, {-0.07, 0.4}}),
  };
  for (const auto& m : cases) {
    for (double eps : {0.5, 0.25, 0.1, 0.05}) {
      double aj = amortized_jq(m, spec, eps);
      AugurBounds b = augur_bounds(m, spec, eps);
      CHECK(b.lower <= aj * (1.0 + 1e-12));
      if (!b.upper_infinite) CHECK(aj <= b.upper * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("sandwich bounds trap the fractional amortized quotient") {
  StolzSpec spec = parabolic();
  Measure m = atoms({{0.04, 0.5}, {-0.15, 1.0}, {0.6, 2.0}});
  for (double s : {0.5, 1.0, 2.0}) {
    for (double eps : {0.5, 0.25, 0.1, 0.05}) {
      double aj = amortized_jq(m, spec, eps, s);
      AugurBounds b = augur_bounds(m, spec, eps, s);
      CHECK(b.lower <= aj * (1.0 + 1e-10));
      if (!b.upper_infinite) CHECK(aj <= b.upper * (1.0 + 1e-10));
    }
  }
}

TEST_CASE("scan over shrinking depths") {
  std::vector<double> grid;
  for (int k = 0; k < 20; ++k) grid.push_back(0.1 * std::pow(0.5, k));

  // mass at the boundary point blows the average up
  AjScan blow = aj_scan(atoms({{0.0, 1.0}}), parabolic(), grid);
  REQUIRE(blow.rows.size() == grid.size());
  CHECK(blow.verdict == ScanVerdict::Unbounded);
  CHECK(blow.rows[0].aj == doctest::Approx(1000.0 * std::atan(10.0)).epsilon(1e-12));

  // mass away from the boundary point stabilizes
  AjScan calm = aj_scan(atoms({{0.5, 1.0}}), parabolic(), grid);
  CHECK(calm.verdict == ScanVerdict::Bounded);

  CHECK_THROWS_AS(aj_scan(Measure(), parabolic(), {0.1, 0.1}), Error);
  CHECK_THROWS_AS(aj_scan(Measure(), parabolic(), {0.1, 0.2}), Error);
}
