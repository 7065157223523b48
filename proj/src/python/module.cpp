#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "nsys/blocks.hpp"
#include "nsys/discretize.hpp"
#include "nsys/exponents.hpp"
#include "nsys/json_io.hpp"
#include "nsys/minima.hpp"
#include "nsys/spectrum.hpp"
#include "nsys/svg.hpp"
#include "nsys/systems.hpp"
#include "nsys/version.hpp"

namespace py = pybind11;

namespace {

using namespace nsys;

std::string validate_str(const std::string& map_json, const std::string& kind,
                         bool all_violations) {
  const PLMap map = plmap_from_json(Json::parse(map_json));
  Json result;
  if (kind != "generalized") {
    const auto bad = check_nsystem(map, all_violations);
    if (bad.empty()) return plmap_to_json(map, "n-system").dump();
    if (kind == "n-system") {
      result["valid"] = false;
      result["violations"] = violations_to_json(bad);
      return result.dump();
    }
  }
  const auto bad = check_generalized(map, all_violations);
  if (bad.empty()) return plmap_to_json(map, "generalized").dump();
  result["valid"] = false;
  result["violations"] = violations_to_json(bad);
  return result.dump();
}

std::string ramp_json(int n, const std::string& a, const std::string& b) {
  return plmap_to_json(canonical_ramp(n, parse_rat(a), parse_rat(b)).map(), "n-system").dump();
}

std::string block_json(const std::vector<std::string>& coords) {
  std::vector<Rat> parsed;
  for (const std::string& c : coords) parsed.push_back(parse_rat(c));
  return plmap_to_json(basic_block(SimplexPoint(std::move(parsed))).map(), "generalized").dump();
}

std::vector<std::string> eval_map(const std::string& map_json, const std::string& q) {
  const PLMap map = plmap_from_json(Json::parse(map_json));
  std::vector<std::string> out;
  for (const Rat& v : map.eval(parse_rat(q))) out.push_back(rat_str(v));
  return out;
}

std::string realize_json(const std::string& schedule_json, const std::string& Q) {
  const RealizedPrefix prefix = realize(schedule_from_json(Json::parse(schedule_json)), parse_rat(Q));
  Json result;
  result["system"] = plmap_to_json(prefix.system.map(), "generalized");
  Json bounds = Json::array();
  for (const Rat& b : prefix.boundaries) bounds.push_back(rat_str(b));
  result["boundaries"] = std::move(bounds);
  return result.dump();
}

std::string schedule_exponents_json(const std::string& schedule_json, const std::string& audit_Q,
                                    const std::string& tol) {
  const BlockSchedule sched = schedule_from_json(Json::parse(schedule_json));
  const ScheduleExponents se = schedule_exponents(sched);
  Json result;
  result["n"] = se.n;
  Json liminf = Json::array(), limsup = Json::array();
  for (const Rat& x : se.liminf) liminf.push_back(rat_str(x));
  for (const Rat& x : se.limsup) limsup.push_back(rat_str(x));
  result["liminf"] = std::move(liminf);
  result["limsup"] = std::move(limsup);
  if (!audit_Q.empty())
    result["audit"] = audit_to_json(audit_schedule(sched, parse_rat(audit_Q), parse_rat(tol)));
  return result.dump();
}

std::string spectrum_json(int n, const std::vector<std::string>& omega,
                          const std::string& audit_Q, const std::string& tol) {
  ExponentProfile profile;
  profile.n = n;
  for (const std::string& tok : omega) {
    const auto w = ExtRat::try_parse(tok);
    if (!w) throw std::invalid_argument("cannot parse omega entry '" + tok + "'");
    profile.omega.push_back(*w);
  }
  return certificate_to_json(realize_spectrum(profile, parse_rat(audit_Q), parse_rat(tol))).dump();
}

std::string discretize_json(const std::string& map_json, const std::vector<std::string>& points) {
  const GenNSystem sys =
      GenNSystem::require(plmap_from_json(Json::parse(map_json)), "discretize input");
  std::vector<Rat> grid;
  for (const std::string& p : points) grid.push_back(parse_rat(p));
  return plmap_to_json(discretize(sys, grid).map(), "n-system").dump();
}

std::string approximate_json(const std::string& map_json, const std::string& eps) {
  const GenNSystem sys =
      GenNSystem::require(plmap_from_json(Json::parse(map_json)), "approximate input");
  const ApproxResult res = approximate(sys, parse_rat(eps));
  Json result;
  result["system"] = plmap_to_json(res.system.map(), "n-system");
  result["sup_norm"] = rat_str(res.sup_norm);
  Json grid = Json::array();
  for (const Rat& g : res.grid) grid.push_back(rat_str(g));
  result["grid"] = std::move(grid);
  return result.dump();
}

std::string minima_trajectory_csv(const std::vector<std::string>& u, double q_max, double step) {
  std::ostringstream csv;
  write_minima_csv(csv, minima_trajectory(TargetVector::from_strings(u), q_max, step));
  return csv.str();
}

std::string estimate_exponents_json(const std::vector<std::string>& u, double q_max, double step,
                                    double tail) {
  const auto trajectory = minima_trajectory(TargetVector::from_strings(u), q_max, step);
  Json result = estimate_to_json(estimate_exponents(trajectory, tail));
  result["points"] = trajectory.size();
  return result.dump();
}

std::string render_svg_str(const std::string& map_json, int width, int height, bool guides,
                           bool slope_labels) {
  SvgOptions opt;
  opt.width = width;
  opt.height = height;
  opt.guides = guides;
  opt.slope_labels = slope_labels;
  return render_svg(plmap_from_json(Json::parse(map_json)), opt);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "piecewise-linear systems, exponent spectra, lattice minima";
  m.def("validate", &validate_str, py::arg("map_json"), py::arg("kind") = "auto",
        py::arg("all_violations") = false,
        "Validate a map; returns the kinded map json or {'valid': false, ...}.");
  m.def("ramp_json", &ramp_json, py::arg("n"), py::arg("a"), py::arg("b"));
  m.def("block_json", &block_json, py::arg("coords"));
  m.def("eval_map", &eval_map, py::arg("map_json"), py::arg("q"));
  m.def("realize_json", &realize_json, py::arg("schedule_json"), py::arg("Q"));
  m.def("schedule_exponents_json", &schedule_exponents_json, py::arg("schedule_json"),
        py::arg("audit_Q") = "", py::arg("tol") = "1/50");
  m.def("spectrum_json", &spectrum_json, py::arg("n"), py::arg("omega"),
        py::arg("audit_Q") = "59049", py::arg("tol") = "1/50");
  m.def("discretize_json", &discretize_json, py::arg("map_json"), py::arg("points"));
  m.def("approximate_json", &approximate_json, py::arg("map_json"), py::arg("eps"));
  m.def("minima_trajectory", &minima_trajectory_csv, py::arg("u"), py::arg("q_max"),
        py::arg("step") = 0.5);
  m.def("estimate_exponents", &estimate_exponents_json, py::arg("u"), py::arg("q_max"),
        py::arg("step") = 0.5, py::arg("tail") = 0.5);
  m.def("render_svg", &render_svg_str, py::arg("map_json"), py::arg("width") = 800,
        py::arg("height") = 480, py::arg("guides") = true, py::arg("slope_labels") = false);
  m.def("version", [] { return std::string(kVersion); });
}
