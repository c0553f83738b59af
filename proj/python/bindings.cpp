#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "picklab/counterexamples.hpp"
#include "picklab/julia.hpp"
#include "picklab/nevanlinna.hpp"
#include "picklab/regularity.hpp"

namespace py = pybind11;
using namespace picklab;

namespace {

DensityPiece make_piece(const std::string& form, double a, double b, double center,
                        double c, double p, double k) {
  DensityPiece pc;
  if (form == "power")
    pc.form = DensityPiece::Form::Power;
  else if (form == "constant")
    pc.form = DensityPiece::Form::Constant;
  else if (form == "expinv")
    pc.form = DensityPiece::Form::ExpInv;
  else
    throw Error(ErrorCode::InvalidArgument, "unknown density form: " + form);
  pc.a = a;
  pc.b = b;
  pc.center = center;
  pc.c = c;
  pc.p = p;
  pc.k = k;
  return pc;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Boundary-regularity toolkit for Pick functions";

  py::register_exception<Error>(m, "PicklabError");

  py::enum_<Tag>(m, "Tag")
      .value("Integrable", Tag::Integrable)
      .value("Divergent", Tag::Divergent)
      .value("Inconclusive", Tag::Inconclusive);

  py::enum_<ScanVerdict>(m, "ScanVerdict")
      .value("Bounded", ScanVerdict::Bounded)
      .value("Unbounded", ScanVerdict::Unbounded)
      .value("Inconclusive", ScanVerdict::Inconclusive);

  py::class_<Measure>(m, "Measure")
      .def_static(
          "from_data",
          [](const std::vector<std::pair<double, double>>& atoms,
             const std::vector<py::dict>& densities) {
            std::vector<Atom> as;
            for (const auto& [t, w] : atoms) as.push_back({t, w});
            std::vector<DensityPiece> ps;
            for (const auto& d : densities)
              ps.push_back(make_piece(d["form"].cast<std::string>(),
                                      d["support"].cast<std::pair<double, double>>().first,
                                      d["support"].cast<std::pair<double, double>>().second,
                                      d.contains("center") ? d["center"].cast<double>() : 0.0,
                                      d["c"].cast<double>(),
                                      d.contains("p") ? d["p"].cast<double>() : 0.0,
                                      d.contains("k") ? d["k"].cast<double>() : 0.0));
            return Measure::validated(std::move(as), std::move(ps));
          },
          py::arg("atoms"), py::arg("densities") = std::vector<py::dict>{})
      .def("mass", &Measure::mass)
      .def("total_mass", &Measure::total_mass)
      .def_property_readonly("atoms", [](const Measure& mu) {
        std::vector<std::pair<double, double>> out;
        for (const auto& at : mu.atoms()) out.emplace_back(at.t, at.w);
        return out;
      });

  py::class_<RateFunction>(m, "RateFunction")
      .def_static("power", &RateFunction::power)
      .def_static("expinv", &RateFunction::expinv)
      .def_static("powerlog", &RateFunction::powerlog)
      .def_static("scale", &RateFunction::scale)
      .def_static("min_of", &RateFunction::min_of)
      .def("value", &RateFunction::value)
      .def("log2_value", &RateFunction::log2_value)
      .def("derivative", &RateFunction::derivative)
      .def("is_little_o_of_t", &RateFunction::is_little_o_of_t)
      .def("describe", &RateFunction::describe);

  py::class_<NevanlinnaRep>(m, "NevanlinnaRep")
      .def(py::init([](double a, double b, const Measure& mu) {
             return NevanlinnaRep{a, b, mu};
           }),
           py::arg("a") = 0.0, py::arg("b") = 0.0, py::arg("mu") = Measure())
      .def_readonly("a", &NevanlinnaRep::a)
      .def_readonly("b", &NevanlinnaRep::b)
      .def_readonly("mu", &NevanlinnaRep::mu);

  py::class_<IntegrabilityVerdict>(m, "IntegrabilityVerdict")
      .def_readonly("tag", &IntegrabilityVerdict::tag)
      .def_readonly("estimate", &IntegrabilityVerdict::estimate)
      .def_readonly("tail_bound", &IntegrabilityVerdict::tail_bound)
      .def_readonly("shells", &IntegrabilityVerdict::shells);

  py::class_<RegularityReport>(m, "RegularityReport")
      .def_readonly("verdict", &RegularityReport::verdict)
      .def_property_readonly("witness_C", [](const RegularityReport& r) {
        return r.witness_C ? py::cast(*r.witness_C) : py::none().cast<py::object>();
      });

  m.def("evaluate", &evaluate);
  m.def("evaluate_reduced", &evaluate_reduced);
  m.def("nontangential_value", [](const NevanlinnaRep& rep, double tau) {
    NontangentialValue v = nontangential_value(rep, tau);
    py::dict d;
    d["finite"] = v.status == LimitStatus::Finite;
    if (v.status == LimitStatus::Finite) d["value"] = v.value;
    return d;
  });
  m.def("nontangential_polynomial", [](const NevanlinnaRep& rep, double tau, int n) {
    BoundaryPolynomial p = nontangential_polynomial(rep, tau, n);
    if (!p.regular)
      throw Error(ErrorCode::NotRegularToOrder,
                  "inverse moment of order " + std::to_string(p.failing_moment) + " diverges");
    return p.coeffs;
  });
  m.def("aronszajn_krein", &aronszajn_krein);

  m.def("julia_quotient",
        py::overload_cast<const NevanlinnaRep&, Complex>(&julia_quotient));
  m.def("julia_quotient_measure",
        py::overload_cast<const Measure&, Complex>(&julia_quotient));
  m.def("fractional_laplacian_jq", &fractional_laplacian_jq, py::arg("mu"), py::arg("z"),
        py::arg("s"), py::arg("legacy_prefactor") = false);
  m.def("amortized_jq",
        [](const Measure& mu, double tau, const RateFunction& lam, double d, double s) {
          return amortized_jq(mu, StolzSpec{tau, lam}, d, s);
        },
        py::arg("mu"), py::arg("tau"), py::arg("lam"), py::arg("d"), py::arg("s") = 0.0);
  m.def("augur_bounds",
        [](const Measure& mu, double tau, const RateFunction& lam, double eps, double s) {
          AugurBounds b = augur_bounds(mu, StolzSpec{tau, lam}, eps, s);
          return std::make_pair(b.lower, b.upper);
        },
        py::arg("mu"), py::arg("tau"), py::arg("lam"), py::arg("eps"), py::arg("s") = 0.0);
  m.def("aj_scan",
        [](const Measure& mu, double tau, const RateFunction& lam,
           const std::vector<double>& grid, double s) {
          AjScan scan = aj_scan(mu, StolzSpec{tau, lam}, grid, s);
          std::vector<std::pair<double, double>> rows;
          for (const auto& r : scan.rows) rows.emplace_back(r.d, r.aj);
          return std::make_pair(rows, scan.verdict);
        },
        py::arg("mu"), py::arg("tau"), py::arg("lam"), py::arg("grid"), py::arg("s") = 0.0);

  m.def("gamma_regular", &gamma_regular, py::arg("mu"), py::arg("tau"), py::arg("gamma"),
        py::arg("radius") = 1.0);
  m.def("is_augury", &is_augury);
  m.def("constructed_augury", &constructed_augury);
  m.def("order_of_regularity",
        [](const Measure& mu, double tau, int n_max) {
          return order_of_regularity(mu, tau, n_max).n_star;
        });
  m.def("analytic_determinacy", &analytic_determinacy);

  m.def("pitting_measure", [](const RateFunction& g, const RateFunction& l, int N) {
    SpikeMeasure sm = pitting_measure(g, l, N);
    std::vector<std::tuple<int, double, double, double>> wit;
    for (const auto& w : sm.witnesses) wit.emplace_back(w.n, w.t, w.w, w.log2_w);
    return std::make_pair(sm.mu, wit);
  });
  m.def("horocyclic_failure_measure",
        [](const RateFunction& g, const RateFunction& l, int N) {
          SpikeMeasure sm = horocyclic_failure_measure(g, l, N);
          std::vector<std::tuple<int, double, double, double>> wit;
          for (const auto& w : sm.witnesses) wit.emplace_back(w.n, w.t, w.w, w.log2_w);
          return std::make_pair(sm.mu, wit);
        });
}
