#include <doctest.h>

#include <cmath>
#include <random>

#include "picklab/integrate.hpp"
#include "picklab/measure.hpp"

using namespace picklab;

namespace {

Measure atom(double t, double w) { return Measure::validated({{t, w}}, {}); }

Measure power_density(double c, double p, double a, double b, double center = 0.0) {
  DensityPiece pc;
  pc.form = DensityPiece::Form::Power;
  pc.c = c;
  pc.p = p;
  pc.a = a;
  pc.b = b;
  pc.center = center;
  return Measure::validated({}, {pc});
}

Measure lebesgue(double a, double b) {
  DensityPiece pc;
  pc.form = DensityPiece::Form::Constant;
  pc.c = 1.0;
  pc.a = a;
  pc.b = b;
  return Measure::validated({}, {pc});
}

}  // namespace

TEST_CASE("validation accepts and normalizes") {
  Measure m = Measure::validated({{0.5, 1.0}, {0.2, 0.0}, {-1.0, 2.0}}, {});
  CHECK(m.atoms().size() == 2);  // zero weight dropped
  CHECK(m.atoms()[0].t == -1.0);  // sorted
}

TEST_CASE("validation rejects bad data") {
  CHECK_THROWS_AS(Measure::validated({{0.5, -1.0}}, {}), Error);
  CHECK_THROWS_AS(power_density(1.0, -1.5, -1.0, 1.0), Error);
  DensityPiece p1, p2;
  p1.form = p2.form = DensityPiece::Form::Constant;
  p1.c = p2.c = 1.0;
  p1.a = 0.0; p1.b = 1.0;
  p2.a = 0.5; p2.b = 2.0;
  CHECK_THROWS_AS(Measure::validated({}, {p1, p2}), Error);
}

TEST_CASE("mass uses the open-interval convention") {
  CHECK(atom(0.5, 1.0).mass(0.0, 1.0) == 1.0);
  CHECK(atom(0.5, 1.0).mass(0.5, 1.0) == 0.0);  // endpoint excluded
  Measure m = power_density(1.0, 2.0, 0.0, 1.0);
  CHECK(m.mass(0.0, 0.5) == doctest::Approx(1.0 / 24.0).epsilon(1e-12));
}

TEST_CASE("mass is additive over the measure sum") {
  Measure m1 = atom(0.3, 2.0);
  Measure m2 = power_density(1.0, 2.0, 0.0, 1.0);
  Measure sum = m1 + m2;
  for (auto [a, b] : {std::pair{0.0, 0.5}, {0.25, 0.75}, {-1.0, 2.0}})
    CHECK(sum.mass(a, b) == doctest::Approx(m1.mass(a, b) + m2.mass(a, b)).epsilon(1e-14));
}

TEST_CASE("mass is monotone in the window") {
  Measure m = atom(0.3, 2.0) + lebesgue(-1.0, 1.0);
  CHECK(m.mass(0.0, 0.5) <= m.mass(-0.1, 0.6));
  CHECK(m.mass(-0.1, 0.6) <= m.mass(-1.0, 1.0));
}

TEST_CASE("restricted and outside partition the measure") {
  Measure m = atom(0.5, 1.0) + atom(2.0, 3.0) + lebesgue(-2.0, 2.0);
  Measure in = m.restricted(-1.0, 1.0);
  Measure out = m.outside(-1.0, 1.0);
  CHECK(in.total_mass() + out.total_mass() == doctest::Approx(m.total_mass()).epsilon(1e-14));
  CHECK(in.atoms().size() == 1);
  CHECK(out.atoms().size() == 1);
}

TEST_CASE("exact expinv density integral") {
  DensityPiece pc;
  pc.form = DensityPiece::Form::ExpInv;
  pc.c = 1.0; pc.k = 1.0; pc.a = -1.0; pc.b = 1.0; pc.center = 0.0;
  Measure m = Measure::validated({}, {pc});
  // cross-check against adaptive quadrature away from the center
  double exact = m.mass(0.1, 1.0);
  double numeric = quad([](double t) { return std::exp(-1.0 / t); }, 0.1, 1.0);
  CHECK(exact == doctest::Approx(numeric).epsilon(1e-10));
  // symmetric across the center
  CHECK(m.mass(-1.0, 0.0) == doctest::Approx(m.mass(0.0, 1.0)).epsilon(1e-12));
}

TEST_CASE("integrate_against: symbolic examples") {
  IntegrandSpec g = IntegrandSpec::inverse_power(2.0, 0.0);

  auto v1 = integrate_against(power_density(1.0, 1.5, -1.0, 1.0), g);
  CHECK(v1.tag == Tag::Integrable);
  CHECK(v1.estimate == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(v1.symbolic);

  CHECK(integrate_against(power_density(1.0, 1.0, -1.0, 1.0), g).tag == Tag::Divergent);

  auto v3 = integrate_against(atom(0.5, 1.0), g, 0.25);
  CHECK(v3.tag == Tag::Integrable);
  CHECK(v3.estimate == 0.0);  // no mass in the window

  CHECK(integrate_against(atom(0.0, 1.0), g).tag == Tag::Divergent);
}

TEST_CASE("shell classifier examples") {
  auto v1 = shell_integrability(lebesgue(-1.0, 1.0), IntegrandSpec::inverse_power(0.5, 0.0), 0.0);
  CHECK(v1.tag == Tag::Integrable);
  CHECK(v1.estimate == doctest::Approx(4.0).epsilon(1e-6));

  auto v2 = shell_integrability(lebesgue(-1.0, 1.0), IntegrandSpec::inverse_power(1.0, 0.0), 0.0);
  CHECK(v2.tag == Tag::Divergent);

  auto v3 = shell_integrability(Measure(), IntegrandSpec::inverse_power(2.0, 0.0), 0.0);
  CHECK(v3.tag == Tag::Integrable);
  CHECK(v3.estimate == 0.0);
}

TEST_CASE("shell classifier is exact when the tail carries no mass") {
  Measure m = atom(0.5, 1.0) + atom(0.25, 2.0);
  auto v = shell_integrability(m, IntegrandSpec::inverse_power(2.0, 0.0), 0.0);
  CHECK(v.tag == Tag::Integrable);
  CHECK(v.tail_bound == 0.0);
  CHECK(v.estimate == doctest::Approx(1.0 / 0.25 + 2.0 / 0.0625).epsilon(1e-14));
}

TEST_CASE("symbolic and shell paths agree on the power family") {
  std::mt19937_64 rng(20240817);
  std::uniform_real_distribution<double> pd(-0.5, 4.0), ed(0.2, 1.8);
  for (int trial = 0; trial < 50; ++trial) {
    double p = pd(rng), e = ed(rng);
    Measure m = power_density(1.0, p, -1.0, 1.0);
    IntegrandSpec g = IntegrandSpec::inverse_power(e, 0.0);
    auto sym = integrate_against(m, g);
    auto num = shell_integrability(m, g, 0.0);
    // skip the classifier's borderline band: its geometric-ratio cutoff 0.95
    // resolves decay exponents only down to -log2(0.95) ~ 0.074
    if (p - e <= -1.0 + 0.08) continue;
    CHECK(sym.tag == num.tag);
    if (sym.tag == Tag::Integrable)
      CHECK(sym.estimate == doctest::Approx(num.estimate).epsilon(1e-4));
  }
}

TEST_CASE("signed inverse moments") {
  Measure m = atom(0.5, 1.0) + atom(-0.25, 2.0);
  CHECK(signed_inverse_moment(m, 0.0, 1) == doctest::Approx(2.0 - 8.0).epsilon(1e-14));
  CHECK(signed_inverse_moment(m, 0.0, 2) == doctest::Approx(4.0 + 32.0).epsilon(1e-14));
  // odd power of an even density cancels by symmetry
  CHECK(signed_inverse_moment(power_density(1.0, 2.0, -1.0, 1.0), 0.0, 1) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(signed_inverse_moment(power_density(1.0, 2.0, -1.0, 1.0), 0.0, 2) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(signed_inverse_moment(atom(0.0, 1.0), 0.0, 1), Error);
}

TEST_CASE("poisson tail integral") {
  Measure m = atom(0.5, 1.0);
  CHECK(poisson_tail_integral(m, -1.0, 1.0) == doctest::Approx(0.4).epsilon(1e-14));
  Measure l = lebesgue(0.0, 1.0);
  CHECK(poisson_tail_integral(l, 0.0, 1.0) ==
        doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-10));
}
