#include "picklab/json_io.hpp"

namespace picklab {

Measure measure_from_json(const Json& j) {
  std::vector<Atom> atoms;
  std::vector<DensityPiece> pieces;
  for (const auto& a : j.value("atoms", Json::array()))
    atoms.push_back({a.at("t").get<double>(), a.at("w").get<double>()});
  for (const auto& d : j.value("densities", Json::array())) {
    DensityPiece pc;
    std::string form = d.at("form").get<std::string>();
    if (form == "power") {
      pc.form = DensityPiece::Form::Power;
      pc.p = d.at("p").get<double>();
    } else if (form == "constant") {
      pc.form = DensityPiece::Form::Constant;
    } else if (form == "expinv") {
      pc.form = DensityPiece::Form::ExpInv;
      pc.k = d.at("k").get<double>();
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown density form: " + form);
    }
    pc.c = d.at("c").get<double>();
    pc.center = d.value("center", 0.0);
    pc.a = d.at("support").at(0).get<double>();
    pc.b = d.at("support").at(1).get<double>();
    pieces.push_back(pc);
  }
  return Measure::validated(std::move(atoms), std::move(pieces));
}

Json measure_to_json(const Measure& m) {
  Json j;
  j["atoms"] = Json::array();
  for (const auto& a : m.atoms()) j["atoms"].push_back({{"t", a.t}, {"w", a.w}});
  j["densities"] = Json::array();
  for (const auto& pc : m.pieces()) {
    Json d;
    switch (pc.form) {
      case DensityPiece::Form::Power:
        d["form"] = "power";
        d["p"] = pc.p;
        break;
      case DensityPiece::Form::Constant:
        d["form"] = "constant";
        break;
      case DensityPiece::Form::ExpInv:
        d["form"] = "expinv";
        d["k"] = pc.k;
        break;
    }
    d["c"] = pc.c;
    d["center"] = pc.center;
    d["support"] = {pc.a, pc.b};
    j["densities"].push_back(d);
  }
  return j;
}

RateFunction rate_from_json(const Json& j) {
  std::string form = j.at("form").get<std::string>();
  if (form == "power")
    return RateFunction::power(j.at("c").get<double>(), j.at("p").get<double>());
  if (form == "expinv") return RateFunction::expinv(j.at("k").get<double>());
  if (form == "powerlog")
    return RateFunction::powerlog(j.at("c").get<double>(), j.at("p").get<double>(),
                                  j.at("q").get<double>());
  if (form == "scale")
    return RateFunction::scale(j.at("s").get<double>(), rate_from_json(j.at("inner")));
  if (form == "min")
    return RateFunction::min_of(rate_from_json(j.at("left")), rate_from_json(j.at("right")));
  throw Error(ErrorCode::InvalidArgument, "unknown rate form: " + form);
}

NevanlinnaRep rep_from_json(const Json& j) {
  NevanlinnaRep rep;
  rep.a = j.value("a", 0.0);
  rep.b = j.value("b", 0.0);
  if (rep.b < 0) throw Error(ErrorCode::InvalidArgument, "slope b must be nonnegative");
  if (j.contains("mu")) rep.mu = measure_from_json(j.at("mu"));
  return rep;
}

Json rep_to_json(const NevanlinnaRep& rep) {
  return Json{{"a", rep.a}, {"b", rep.b}, {"mu", measure_to_json(rep.mu)}};
}

Json verdict_to_json(const IntegrabilityVerdict& v) {
  Json j;
  j["tag"] = tag_name(v.tag);
  if (v.tag == Tag::Integrable) {
    j["estimate"] = v.estimate;
    j["tail_bound"] = v.tail_bound;
  }
  j["symbolic"] = v.symbolic;
  if (v.center_mismatch_warning) j["center_mismatch_warning"] = true;
  if (!v.shells.empty()) j["shells"] = v.shells;
  return j;
}

Json report_to_json(const RegularityReport& r) {
  Json j;
  j["verdict"] = verdict_to_json(r.verdict);
  j["tau"] = r.tau;
  if (r.witness_C) j["witness_C"] = *r.witness_C;
  return j;
}

}  // namespace picklab
