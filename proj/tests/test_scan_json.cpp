#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "picklab/json_io.hpp"
#include "picklab/scan_util.hpp"

using namespace picklab;

TEST_CASE("stabilization verdict") {
  CHECK(stabilization_verdict({}) == ScanVerdict::Inconclusive);
  CHECK(stabilization_verdict({0.0, 0.0, 0.0, 0.0}) == ScanVerdict::Bounded);
  CHECK(stabilization_verdict({5.0, 5.0, 5.0, 5.0, 5.0, 5.0, 5.0, 5.0}) ==
        ScanVerdict::Bounded);
  // decreasing: running max settles immediately
  CHECK(stabilization_verdict({10, 9, 8, 7, 6, 5, 4, 3}) == ScanVerdict::Bounded);
  // strictly increasing through the last quartile
  CHECK(stabilization_verdict({1, 2, 3, 4, 5, 6, 7, 8}) == ScanVerdict::Unbounded);
  // hard cap
  CHECK(stabilization_verdict({0.0, 2e9}) == ScanVerdict::Unbounded);
  CHECK(stabilization_verdict({1.0, std::numeric_limits<double>::infinity()}) ==
        ScanVerdict::Unbounded);
  CHECK(stabilization_verdict({1.0, std::nan("")}) == ScanVerdict::Unbounded);
  // still growing at the end, but not strictly: cannot call it either way
  CHECK(stabilization_verdict({1, 1, 2, 2, 3, 3, 4, 4}) == ScanVerdict::Inconclusive);
  // creeping toward a limit: stabilization within 5% outranks monotone growth
  CHECK(stabilization_verdict({1.0, 1.001, 1.002, 1.003, 1.004, 1.005, 1.006, 1.007}) ==
        ScanVerdict::Bounded);
}

TEST_CASE("17-digit rendering round-trips") {
  for (double v : {1.0 / 3.0, 3.141592653589793, 1e-300, 1471.1276743037347, 0.0, -2.5}) {
    CHECK(std::stod(format_sig17(v)) == v);
  }
}

TEST_CASE("csv rows are comma-joined with a trailing newline") {
  std::ostringstream os;
  write_csv_row(os, {"a", "b", "c"});
  CHECK(os.str() == "a,b,c\n");
}

TEST_CASE("measure json round-trip") {
  DensityPiece pw;
  pw.form = DensityPiece::Form::Power;
  pw.c = 2.0; pw.p = 1.5; pw.a = -1.0; pw.b = 1.0; pw.center = 0.0;
  DensityPiece ei;
  ei.form = DensityPiece::Form::ExpInv;
  ei.c = 1.0; ei.k = 2.0; ei.a = 2.0; ei.b = 3.0; ei.center = 2.0;
  Measure m = Measure::validated({{0.5, 1.0}, {-0.25, 2.0}}, {pw, ei});

  Measure back = measure_from_json(measure_to_json(m));
  REQUIRE(back.atoms().size() == 2);
  REQUIRE(back.pieces().size() == 2);
  CHECK(back.atoms()[0].t == -0.25);
  CHECK(back.total_mass() == doctest::Approx(m.total_mass()).epsilon(1e-14));
  CHECK(back.mass(0.0, 0.9) == doctest::Approx(m.mass(0.0, 0.9)).epsilon(1e-14));
}

TEST_CASE("measure json parsing") {
  Json j = Json::parse(R"({"atoms":[{"t":0.5,"w":1.0}],
    "densities":[{"form":"constant","c":1.0,"support":[-1.0,1.0]}]})");
  Measure m = measure_from_json(j);
  CHECK(m.atoms().size() == 1);
  CHECK(m.pieces().size() == 1);
  CHECK(m.total_mass() == doctest::Approx(3.0).epsilon(1e-14));
  CHECK_THROWS_AS(measure_from_json(Json::parse(R"({"densities":[{"form":"nope","c":1.0,
    "support":[0.0,1.0]}]})")), Error);
}

TEST_CASE("rate json parsing") {
  CHECK(rate_from_json(Json::parse(R"({"form":"power","c":1.0,"p":2.0})")).value(0.5) ==
        doctest::Approx(0.25).epsilon(1e-15));
  CHECK(rate_from_json(Json::parse(R"({"form":"expinv","k":1.0})")).value(0.5) ==
        doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  RateFunction sc = rate_from_json(
      Json::parse(R"({"form":"scale","s":2.0,"inner":{"form":"power","c":1.0,"p":2.0}})"));
  CHECK(sc.value(0.1) == doctest::Approx(0.04).epsilon(1e-14));
  RateFunction mn = rate_from_json(Json::parse(
      R"({"form":"min","left":{"form":"power","c":1.0,"p":2.0},
          "right":{"form":"power","c":1.0,"p":3.0}})"));
  CHECK(mn.value(0.5) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK_THROWS_AS(rate_from_json(Json::parse(R"({"form":"mystery"})")), Error);
}

TEST_CASE("representation json round-trip") {
  NevanlinnaRep rep;
  rep.a = -0.5;
  rep.b = 0.25;
  rep.mu = Measure::validated({{1.0, 2.0}}, {});
  NevanlinnaRep back = rep_from_json(rep_to_json(rep));
  CHECK(back.a == rep.a);
  CHECK(back.b == rep.b);
  REQUIRE(back.mu.atoms().size() == 1);
  CHECK(back.mu.atoms()[0].w == 2.0);
  // negative slope is not a valid half-plane map
  CHECK_THROWS_AS(rep_from_json(Json::parse(R"({"a":0.0,"b":-1.0})")), Error);
}

TEST_CASE("verdict and report serialization") {
  IntegrabilityVerdict v;
  v.tag = Tag::Integrable;
  v.estimate = 4.0;
  v.tail_bound = 0.125;
  v.symbolic = false;
  Json j = verdict_to_json(v);
  CHECK(j["tag"] == "Integrable");
  CHECK(j["estimate"] == 4.0);
  CHECK(j["tail_bound"] == 0.125);

  IntegrabilityVerdict d;
  d.tag = Tag::Divergent;
  Json jd = verdict_to_json(d);
  CHECK(jd["tag"] == "Divergent");
  CHECK(!jd.contains("estimate"));

  RegularityReport r;
  r.verdict = v;
  r.witness_C = 0.25;
  r.tau = 0.5;
  Json jr = report_to_json(r);
  CHECK(jr["witness_C"] == 0.25);
  CHECK(jr["tau"] == 0.5);
  CHECK(jr["verdict"]["tag"] == "Integrable");
}
