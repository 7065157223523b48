#include "nsys/json_io.hpp"

#include <stdexcept>

namespace nsys {

namespace {

Json rats_to_json(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const Rat& x : v) out.push_back(rat_str(x));
  return out;
}

std::vector<Rat> rats_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<Rat> out;
  out.reserve(j.size());
  for (const Json& e : j) {
    if (!e.is_string())
      throw std::invalid_argument(std::string(what) + " entries must be rational strings");
    out.push_back(parse_rat(e.get<std::string>()));
  }
  return out;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw std::invalid_argument(std::string("missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

Json plmap_to_json(const PLMap& P) {
  Json out;
  out["n"] = P.components();
  out["breakpoints"] = rats_to_json(P.breakpoints());
  Json values = Json::array();
  for (std::size_t k = 0; k < P.breakpoint_count(); ++k) values.push_back(rats_to_json(P.value_at(k)));
  out["values"] = std::move(values);
  return out;
}

Json plmap_to_json(const PLMap& P, const std::string& kind) {
  Json out = plmap_to_json(P);
  out["kind"] = kind;
  return out;
}

PLMap plmap_from_json(const Json& j) {
  const Json& bps = field(j, "breakpoints");
  const Json& vals = field(j, "values");
  if (!vals.is_array()) throw std::invalid_argument("values must be an array of arrays");
  std::vector<std::vector<Rat>> values;
  values.reserve(vals.size());
  for (const Json& row : vals) values.push_back(rats_from_json(row, "values row"));
  PLMap map(rats_from_json(bps, "breakpoints"), std::move(values));
  if (j.contains("n") && j.at("n").get<int>() != map.components())
    throw std::invalid_argument("declared n does not match the value rows");
  return map;
}

Json schedule_to_json(const BlockSchedule& s) {
  Json out;
  out["n"] = s.n();
  Json cycle = Json::array();
  for (const SimplexPoint& a : s.cycle()) cycle.push_back(rats_to_json(a.coords()));
  out["cycle"] = std::move(cycle);
  Json pert;
  switch (s.perturbation().kind) {
    case Perturbation::Kind::None: pert["kind"] = "none"; break;
    case Perturbation::Kind::Harmonic:
      pert["kind"] = "harmonic";
      pert["eps0"] = rat_str(s.perturbation().eps0);
      break;
    case Perturbation::Kind::Geometric:
      pert["kind"] = "geometric";
      pert["eps0"] = rat_str(s.perturbation().eps0);
      pert["rho"] = rat_str(s.perturbation().rho);
      break;
  }
  out["perturbation"] = std::move(pert);
  return out;
}

BlockSchedule schedule_from_json(const Json& j) {
  const int n = field(j, "n").get<int>();
  const Json& cycle_json = field(j, "cycle");
  if (!cycle_json.is_array()) throw std::invalid_argument("cycle must be an array");
  std::vector<SimplexPoint> cycle;
  cycle.reserve(cycle_json.size());
  for (const Json& row : cycle_json) cycle.emplace_back(rats_from_json(row, "cycle entry"));
  Perturbation pert = Perturbation::none();
  if (j.contains("perturbation")) {
    const Json& p = j.at("perturbation");
    const std::string kind = field(p, "kind").get<std::string>();
    if (kind == "none") {
      pert = Perturbation::none();
    } else if (kind == "harmonic") {
      pert = Perturbation::harmonic(parse_rat(field(p, "eps0").get<std::string>()));
    } else if (kind == "geometric") {
      pert = Perturbation::geometric(parse_rat(field(p, "eps0").get<std::string>()),
                                     parse_rat(field(p, "rho").get<std::string>()));
    } else {
      throw std::invalid_argument("unknown perturbation kind '" + kind + "'");
    }
  }
  return BlockSchedule(n, std::move(cycle), pert);
}

Json violations_to_json(const std::vector<Violation>& v) {
  Json out = Json::array();
  for (const Violation& x : v) {
    Json e;
    e["axiom"] = axiom_name(x.axiom);
    e["site"] = x.site == Violation::Site::Breakpoint ? "breakpoint" : "segment";
    e["index"] = x.index;
    e["detail"] = x.detail;
    out.push_back(std::move(e));
  }
  return out;
}

Json relation_violations_to_json(const std::vector<RelationViolation>& v) {
  Json out = Json::array();
  for (const RelationViolation& x : v) {
    Json e;
    e["relation"] = x.relation;
    e["detail"] = x.detail;
    out.push_back(std::move(e));
  }
  return out;
}

Json profile_to_json(const ExponentProfile& E) {
  Json out;
  out["n"] = E.n;
  Json omega = Json::array();
  for (const ExtRat& w : E.omega) omega.push_back(w.str());
  out["omega"] = std::move(omega);
  return out;
}

ExponentProfile profile_from_json(const Json& j) {
  ExponentProfile E;
  E.n = field(j, "n").get<int>();
  const Json& omega = field(j, "omega");
  if (!omega.is_array()) throw std::invalid_argument("omega must be an array");
  for (const Json& e : omega) {
    if (!e.is_string()) throw std::invalid_argument("omega entries must be strings");
    const auto w = ExtRat::try_parse(e.get<std::string>());
    if (!w) throw std::invalid_argument("cannot parse omega entry '" + e.get<std::string>() + "'");
    E.omega.push_back(*w);
  }
  return E;
}

Json audit_to_json(const AuditReport& a) {
  Json out;
  out["Q"] = rat_str(a.Q);
  out["tol"] = rat_str(a.tol);
  out["liminf"] = rats_to_json(a.liminf);
  out["prefix_min"] = rats_to_json(a.prefix_min);
  out["prefix_max"] = rats_to_json(a.prefix_max);
  out["gap"] = rats_to_json(a.gap);
  out["within_tol"] = a.within_tol;
  return out;
}

Json certificate_to_json(const SpectrumCertificate& c) {
  Json out;
  out["omega"] = profile_to_json(c.omega)["omega"];
  out["n"] = c.omega.n;
  out["psi_lower"] = rats_to_json(c.psi_lower.psi);
  Json entries = Json::array();
  for (const SimplexPoint& a : c.entries) entries.push_back(rats_to_json(a.coords()));
  out["entries"] = std::move(entries);
  out["schedule"] = schedule_to_json(c.schedule);
  out["psi_liminf"] = rats_to_json(c.psi_liminf);
  out["psi_limsup"] = rats_to_json(c.psi_limsup);
  out["omega_realized"] = profile_to_json(c.omega_realized)["omega"];
  out["omega_hat_realized"] = profile_to_json(c.omega_hat_realized)["omega"];
  out["audit"] = audit_to_json(c.audit);
  out["roundtrip_exact"] = c.roundtrip_exact;
  out["uniform_upper"] = c.uniform_upper;
  return out;
}

Json extrema_to_json(const RatioExtremum& e) {
  Json out;
  out["min"] = rat_str(e.min);
  out["max"] = rat_str(e.max);
  out["argmin"] = rats_to_json(e.argmin);
  out["argmax"] = rats_to_json(e.argmax);
  return out;
}

Json estimate_to_json(const ExponentEstimate& e) {
  Json out;
  out["dim"] = e.dim;
  out["q_lo"] = e.q_lo;
  out["q_hi"] = e.q_hi;
  out["psi_lower"] = e.psi_lower;
  out["psi_upper"] = e.psi_upper;
  return out;
}

}  // namespace nsys
