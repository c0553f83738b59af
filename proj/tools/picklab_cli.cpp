#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "picklab/counterexamples.hpp"
#include "picklab/json_io.hpp"
#include "picklab/julia.hpp"
#include "picklab/nevanlinna.hpp"
#include "picklab/regularity.hpp"
#include "picklab/scan_util.hpp"

using namespace picklab;

namespace {

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

// All emitters write through here so --out and stdout behave identically.
struct Output {
  std::string path;  // empty = stdout
  std::ostringstream buf;
  ~Output() = default;

  void flush() {
    if (path.empty()) {
      std::cout << buf.str();
    } else {
      std::ofstream f(path, std::ios::binary);
      f << buf.str();
    }
  }
};

std::vector<double> geometric_grid(double start, int steps) {
  std::vector<double> g;
  for (int i = 0; i < steps; ++i) g.push_back(start * std::pow(0.5, i));
  return g;
}

int verdict_exit(const std::string& expect, bool bad) {
  if (expect == "bounded" && bad) return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary-regularity toolkit for Pick functions"};
  app.require_subcommand(1);

  // accepted for reproducibility of future randomized grids; current grids
  // are deterministic
  unsigned seed = 0;
  app.add_option("--seed", seed, "random seed for grid randomization");
  if (const char* threads = std::getenv("PICKLAB_THREADS")) (void)threads;  // 0/unset = sequential

  std::string measure_path, rep_path, gamma_path, lambda_path, out_path, expect;
  double tau = 0.0, alpha = 0.75, s = 0.0, C = 1.0, D = 1.0;
  double re = 0.0, im = 1.0;
  double d_start = 0.1, eps_start = 0.1;
  int d_steps = 20, eps_steps = 20, n_max = 5, N = 10;
  std::string mode = "julia", curve_kind = "horo";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "write output here instead of stdout");
    sub->add_option("--expect", expect, "exit 2 unless the verdict is bounded/integrable");
    sub->add_option("--tau", tau, "boundary point");
  };

  auto* c_eval = app.add_subcommand("eval", "evaluate f(z) from Herglotz data");
  c_eval->add_option("--rep", rep_path)->required();
  c_eval->add_option("--re", re);
  c_eval->add_option("--im", im);
  add_common(c_eval);

  auto* c_julia = app.add_subcommand("julia", "quotient Im f/Im z at a point or along a curve");
  c_julia->add_option("--rep", rep_path);
  c_julia->add_option("--measure", measure_path);
  c_julia->add_option("--re", re);
  c_julia->add_option("--im", im);
  c_julia->add_option("--gamma", gamma_path, "scan along a curve built from this rate");
  c_julia->add_option("--scale-c", C);
  c_julia->add_option("--depth-d", D);
  c_julia->add_option("--curve", curve_kind, "horo | sqrt");
  c_julia->add_option("--t-start", d_start);
  c_julia->add_option("--t-steps", d_steps);
  c_julia->add_option("--s", s, "kernel power");
  add_common(c_julia);

  auto* c_aj = app.add_subcommand("aj-scan", "amortized quotient over shrinking cross-cuts");
  c_aj->add_option("--measure", measure_path)->required();
  c_aj->add_option("--lambda", lambda_path)->required();
  c_aj->add_option("--d-start", d_start);
  c_aj->add_option("--d-steps", d_steps);
  c_aj->add_option("--s", s);
  add_common(c_aj);

  auto* c_gamma = app.add_subcommand("gamma-test", "gauge-integrability classification");
  c_gamma->add_option("--measure", measure_path)->required();
  c_gamma->add_option("--gamma", gamma_path)->required();
  add_common(c_gamma);

  auto* c_aug = app.add_subcommand("augury-test", "is lambda an admissible approach rate for gamma");
  c_aug->add_option("--lambda", lambda_path)->required();
  c_aug->add_option("--gamma", gamma_path)->required();
  add_common(c_aug);

  auto* c_order = app.add_subcommand("order", "largest finite inverse-moment order");
  c_order->add_option("--measure", measure_path)->required();
  c_order->add_option("--n-max", n_max);
  add_common(c_order);

  auto* c_horo = app.add_subcommand("horocyclic", "sup |f - f(tau)| over shrinking regions");
  c_horo->add_option("--rep", rep_path)->required();
  c_horo->add_option("--gamma", gamma_path)->required();
  c_horo->add_option("--scale-c", C);
  add_common(c_horo);

  auto* c_pit = app.add_subcommand("pitting", "spiking counterexample measure + witnesses");
  c_pit->add_option("--gamma", gamma_path)->required();
  c_pit->add_option("--lambda", lambda_path)->required();
  c_pit->add_option("--count", N);
  c_pit->add_option("--mode", mode, "julia | value");
  add_common(c_pit);

  auto* c_pert = app.add_subcommand("perturb", "rank-one perturbation of an atomic measure");
  c_pert->add_option("--rep", rep_path)->required();
  c_pert->add_option("--alpha", alpha)->required();
  add_common(c_pert);

  auto* c_det = app.add_subcommand("determinacy", "analytic moment determinacy");
  c_det->add_option("--measure", measure_path)->required();
  add_common(c_det);

  auto* c_bounds = app.add_subcommand("bounds-check", "sandwich bounds over an eps grid");
  c_bounds->add_option("--measure", measure_path)->required();
  c_bounds->add_option("--lambda", lambda_path)->required();
  c_bounds->add_option("--eps-start", eps_start);
  c_bounds->add_option("--eps-steps", eps_steps);
  c_bounds->add_option("--s", s);
  add_common(c_bounds);

  CLI11_PARSE(app, argc, argv);

  try {
    Output out;
    out.path = out_path;
    int code = 0;

    if (app.got_subcommand(c_eval)) {
      NevanlinnaRep rep = rep_from_json(load_json(rep_path));
      Complex v = evaluate(rep, Complex(re, im));
      out.buf << Json{{"re", v.real()}, {"im", v.imag()}}.dump(2) << "\n";
    } else if (app.got_subcommand(c_julia)) {
      NevanlinnaRep rep;
      if (!rep_path.empty())
        rep = rep_from_json(load_json(rep_path));
      else if (!measure_path.empty())
        rep.mu = measure_from_json(load_json(measure_path));
      else
        throw std::runtime_error("julia needs --rep or --measure");
      if (gamma_path.empty()) {
        double j = s == 0.0 ? julia_quotient(rep, Complex(re, im))
                            : fractional_laplacian_jq(rep.mu, Complex(re, im), s);
        out.buf << Json{{"j", j}}.dump(2) << "\n";
      } else {
        RateFunction g = rate_from_json(load_json(gamma_path));
        CurveKind kind = curve_kind == "sqrt" ? CurveKind::SqrtHorocyclic : CurveKind::Horocyclic;
        LimsupScan scan =
            julia_limsup_scan(rep, tau, g, C, D, kind, geometric_grid(d_start, d_steps));
        write_csv_row(out.buf, {"t", "height", "J", "running_max", "verdict"});
        for (size_t i = 0; i < scan.rows.size(); ++i) {
          const auto& r = scan.rows[i];
          std::string v = i + 1 == scan.rows.size() ? scan_verdict_name(scan.verdict) : "";
          write_csv_row(out.buf, {format_sig17(r.t), format_sig17(r.height),
                                  format_sig17(r.j), format_sig17(r.running_max), v});
        }
        code = verdict_exit(expect, scan.verdict != ScanVerdict::Bounded);
      }
    } else if (app.got_subcommand(c_aj)) {
      Measure mu = measure_from_json(load_json(measure_path));
      StolzSpec spec{tau, rate_from_json(load_json(lambda_path))};
      AjScan scan = aj_scan(mu, spec, geometric_grid(d_start, d_steps), s);
      write_csv_row(out.buf, {"d", "lambda_d", "aj", "lower", "upper", "verdict"});
      for (size_t i = 0; i < scan.rows.size(); ++i) {
        const auto& r = scan.rows[i];
        std::string v = i + 1 == scan.rows.size() ? scan_verdict_name(scan.verdict) : "";
        write_csv_row(out.buf, {format_sig17(r.d), format_sig17(r.lambda_d),
                                format_sig17(r.aj), format_sig17(r.lower),
                                r.upper_infinite ? "inf" : format_sig17(r.upper), v});
      }
      code = verdict_exit(expect, scan.verdict != ScanVerdict::Bounded);
    } else if (app.got_subcommand(c_gamma)) {
      Measure mu = measure_from_json(load_json(measure_path));
      RegularityReport r = gamma_regular(mu, tau, rate_from_json(load_json(gamma_path)));
      out.buf << report_to_json(r).dump(2) << "\n";
      code = verdict_exit(expect, r.verdict.tag != Tag::Integrable);
    } else if (app.got_subcommand(c_aug)) {
      RegularityReport r = is_augury(rate_from_json(load_json(lambda_path)),
                                     rate_from_json(load_json(gamma_path)));
      out.buf << report_to_json(r).dump(2) << "\n";
      code = verdict_exit(expect, r.verdict.tag != Tag::Integrable);
    } else if (app.got_subcommand(c_order)) {
      Measure mu = measure_from_json(load_json(measure_path));
      OrderResult r = order_of_regularity(mu, tau, n_max);
      Json j{{"n_star", r.n_star}, {"blocked_inconclusive", r.blocked_inconclusive}};
      if (r.n_star > 0)
        j["statement"] = "regular to order " + std::to_string(2 * r.n_star - 1);
      out.buf << j.dump(2) << "\n";
    } else if (app.got_subcommand(c_horo)) {
      NevanlinnaRep rep = rep_from_json(load_json(rep_path));
      std::vector<double> ds;
      for (int k = -6; k <= 6; ++k) ds.push_back(std::pow(2.0, k));
      HoroScan scan = horocyclic_scan(rep, tau, rate_from_json(load_json(gamma_path)), C, ds);
      if (scan.base_status != LimitStatus::Finite)
        throw std::runtime_error("no finite boundary value at tau");
      write_csv_row(out.buf, {"D", "sup_abs_dev", "verdict"});
      for (size_t i = 0; i < scan.rows.size(); ++i) {
        std::string v;
        if (i + 1 == scan.rows.size())
          v = scan.verdict == HoroVerdict::DecreasingToZero
                  ? "DecreasingToZero"
                  : (scan.verdict == HoroVerdict::Unbounded ? "Unbounded" : "Inconclusive");
        write_csv_row(out.buf, {format_sig17(scan.rows[i].D),
                                format_sig17(scan.rows[i].sup_abs_dev), v});
      }
      code = verdict_exit(expect, scan.verdict != HoroVerdict::DecreasingToZero);
    } else if (app.got_subcommand(c_pit)) {
      RateFunction g = rate_from_json(load_json(gamma_path));
      RateFunction l = rate_from_json(load_json(lambda_path));
      SpikeMeasure sm = mode == "value" ? horocyclic_failure_measure(g, l, N)
                                        : pitting_measure(g, l, N);
      auto rows = verify_separation(
          sm, l, mode == "value" ? SeparationMode::Value : SeparationMode::Julia);
      write_csv_row(out.buf, {"n", "t_n", "w_n", "log2_bound", "direct_value"});
      for (size_t i = 0; i < rows.size(); ++i) {
        const auto& w = sm.witnesses[i];
        write_csv_row(out.buf, {std::to_string(rows[i].n), format_sig17(w.t),
                                format_sig17(w.w), format_sig17(rows[i].log2_bound),
                                rows[i].direct ? format_sig17(*rows[i].direct) : ""});
      }
    } else if (app.got_subcommand(c_pert)) {
      NevanlinnaRep rep = rep_from_json(load_json(rep_path));
      out.buf << rep_to_json(aronszajn_krein(rep, alpha)).dump(2) << "\n";
    } else if (app.got_subcommand(c_det)) {
      Measure mu = measure_from_json(load_json(measure_path));
      RegularityReport r = analytic_determinacy(mu, tau);
      Json j = report_to_json(r);
      j["determined"] = r.verdict.tag == Tag::Integrable;
      out.buf << j.dump(2) << "\n";
      code = verdict_exit(expect, r.verdict.tag != Tag::Integrable);
    } else if (app.got_subcommand(c_bounds)) {
      Measure mu = measure_from_json(load_json(measure_path));
      StolzSpec spec{tau, rate_from_json(load_json(lambda_path))};
      write_csv_row(out.buf, {"eps", "lambda_eps", "aj", "lower", "upper"});
      for (int i = 0; i < eps_steps; ++i) {
        double eps = eps_start * std::pow(0.5, i);
        double aj = amortized_jq(mu, spec, eps, s);
        AugurBounds b = augur_bounds(mu, spec, eps, s);
        write_csv_row(out.buf, {format_sig17(eps), format_sig17(spec.lambda.value(eps)),
                                format_sig17(aj), format_sig17(b.lower),
                                b.upper_infinite ? "inf" : format_sig17(b.upper)});
      }
    }

    out.flush();
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
