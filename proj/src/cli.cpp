#include "nsys/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nsys/blocks.hpp"
#include "nsys/discretize.hpp"
#include "nsys/exponents.hpp"
#include "nsys/json_io.hpp"
#include "nsys/minima.hpp"
#include "nsys/plmap.hpp"
#include "nsys/rational.hpp"
#include "nsys/spectrum.hpp"
#include "nsys/svg.hpp"
#include "nsys/systems.hpp"

namespace nsys::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
  const auto maybe = try_parse_rat_list(s);
  if (!maybe) throw std::invalid_argument("cannot parse rational list '" + s + "'");
  return *maybe;
}

Json read_json(const std::string& path) {
  if (path == "-") return Json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return Json::parse(in);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-" || path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write '" + path + "'");
  f << text;
}

Perturbation parse_perturbation(const std::string& arg) {
  const auto parts = split(arg, ':');
  if (parts.empty() || parts[0] == "none") {
    if (parts.size() > 1) throw std::invalid_argument("perturbation 'none' takes no parameters");
    return Perturbation::none();
  }
  if (parts[0] == "harmonic") {
    if (parts.size() != 2) throw std::invalid_argument("expected harmonic:EPS0");
    return Perturbation::harmonic(parse_rat(parts[1]));
  }
  if (parts[0] == "geometric") {
    if (parts.size() != 3) throw std::invalid_argument("expected geometric:EPS0:RHO");
    return Perturbation::geometric(parse_rat(parts[1]), parse_rat(parts[2]));
  }
  throw std::invalid_argument("unknown perturbation '" + parts[0] + "'");
}

std::vector<TrajectoryPoint> trajectory_from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty csv");
  std::size_t d = 0;
  for (const std::string& col : split(line, ','))
    if (col.rfind("L_", 0) == 0) ++d;
  if (d == 0) throw std::invalid_argument("no L_j columns in csv header");
  std::vector<TrajectoryPoint> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() < d + 1) throw std::invalid_argument("short csv row");
    TrajectoryPoint pt;
    pt.q = std::stod(cells[0]);
    for (std::size_t j = 1; j <= d; ++j) pt.L.push_back(std::stod(cells[j]));
    out.push_back(std::move(pt));
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"piecewise-linear systems, exponent spectra, lattice minima"};
  app.name("nsys");
  app.require_subcommand(1);
  int rc = 0;

  // validate
  auto* validate = app.add_subcommand("validate", "check a map against the system axioms");
  std::string v_in = "-", v_kind = "auto";
  bool v_all = false;
  validate->add_option("--in", v_in, "map json, - for stdin");
  validate->add_option("--kind", v_kind, "n-system | generalized | auto")
      ->check(CLI::IsMember({"n-system", "generalized", "auto"}));
  validate->add_flag("--all", v_all, "report every violation, not only the first");
  validate->callback([&] {
    const PLMap map = plmap_from_json(read_json(v_in));
    auto finish = [&](const std::vector<Violation>& bad, const std::string& kind) {
      if (bad.empty()) {
        write_text("-", dump(plmap_to_json(map, kind)), out);
        return true;
      }
      return false;
    };
    std::vector<Violation> bad;
    if (v_kind != "generalized") {
      bad = check_nsystem(map, v_all);
      if (finish(bad, "n-system")) return;
    }
    if (v_kind != "n-system") {
      bad = check_generalized(map, v_all);
      if (finish(bad, "generalized")) return;
    }
    Json fail;
    fail["valid"] = false;
    fail["violations"] = violations_to_json(bad);
    err << dump(fail);
    rc = 2;
  });

  // ramp
  auto* ramp = app.add_subcommand("ramp", "canonical single-ramp system");
  int r_n = 0;
  std::string r_a, r_b, r_out = "-";
  ramp->add_option("--n", r_n, "component count")->required();
  ramp->add_option("--a", r_a, "domain start (rational)")->required();
  ramp->add_option("--b", r_b, "domain end (rational)")->required();
  ramp->add_option("--out", r_out, "output path, - for stdout");
  ramp->callback([&] {
    const NSystem sys = canonical_ramp(r_n, parse_rat(r_a), parse_rat(r_b));
    write_text(r_out, dump(plmap_to_json(sys.map(), "n-system")), out);
  });

  // block
  auto* block = app.add_subcommand("block", "basic block of a strict simplex point");
  std::string bl_a, bl_out = "-";
  block->add_option("--a", bl_a, "coordinates, e.g. 1/6,1/3,1/2")->required();
  block->add_option("--out", bl_out, "output path, - for stdout");
  block->callback([&] {
    const GenNSystem sys = basic_block(SimplexPoint(parse_rat_list(bl_a)));
    write_text(bl_out, dump(plmap_to_json(sys.map(), "generalized")), out);
  });

  // schedule
  auto* schedule = app.add_subcommand("schedule", "build a block schedule file");
  int s_n = 0;
  std::string s_cycle, s_perturb = "none", s_out = "-";
  schedule->add_option("--n", s_n, "component count")->required();
  schedule->add_option("--cycle", s_cycle, "entries separated by ';', coordinates by ','")
      ->required();
  schedule->add_option("--perturb", s_perturb, "none | harmonic:EPS0 | geometric:EPS0:RHO");
  schedule->add_option("--out", s_out, "output path, - for stdout");
  schedule->callback([&] {
    std::vector<SimplexPoint> cycle;
    for (const std::string& entry : split(s_cycle, ';'))
      cycle.emplace_back(parse_rat_list(entry));
    const BlockSchedule sched(s_n, std::move(cycle), parse_perturbation(s_perturb));
    write_text(s_out, dump(schedule_to_json(sched)), out);
  });

  // realize
  auto* realize_cmd = app.add_subcommand("realize", "chain schedule blocks over [1, Q]");
  std::string re_schedule, re_Q, re_out = "-";
  realize_cmd->add_option("--schedule", re_schedule, "schedule json path")->required();
  realize_cmd->add_option("--Q", re_Q, "right end of the window (rational > 1)")->required();
  realize_cmd->add_option("--out", re_out, "output path, - for stdout");
  realize_cmd->callback([&] {
    const BlockSchedule sched = schedule_from_json(read_json(re_schedule));
    const RealizedPrefix prefix = realize(sched, parse_rat(re_Q));
    Json result;
    result["system"] = plmap_to_json(prefix.system.map(), "generalized");
    Json bounds = Json::array();
    for (const Rat& b : prefix.boundaries) bounds.push_back(rat_str(b));
    result["boundaries"] = std::move(bounds);
    write_text(re_out, dump(result), out);
  });

  // exponents
  auto* exponents = app.add_subcommand("exponents", "limit exponents or ratio extrema");
  std::string e_schedule, e_in, e_audit_Q, e_tol = "1/50", e_csv, e_out = "-";
  int e_j = 0;
  exponents->add_option("--schedule", e_schedule, "schedule json: report liminf/limsup");
  exponents->add_option("--audit-Q", e_audit_Q, "audit window end (with --schedule)");
  exponents->add_option("--tol", e_tol, "audit tolerance (with --audit-Q)");
  exponents->add_option("--in", e_in, "map json: report ratio extrema");
  exponents->add_option("--j", e_j, "component index for --in");
  exponents->add_option("--csv", e_csv, "also write the ratio table (with --in)");
  exponents->add_option("--out", e_out, "output path, - for stdout");
  exponents->callback([&] {
    if (e_schedule.empty() == e_in.empty()) {
      err << "exponents: pass exactly one of --schedule or --in\n";
      rc = 64;
      return;
    }
    if (!e_schedule.empty()) {
      const BlockSchedule sched = schedule_from_json(read_json(e_schedule));
      const ScheduleExponents se = schedule_exponents(sched);
      Json result;
      result["n"] = se.n;
      Json liminf = Json::array(), limsup = Json::array();
      for (const Rat& x : se.liminf) liminf.push_back(rat_str(x));
      for (const Rat& x : se.limsup) limsup.push_back(rat_str(x));
      result["liminf"] = std::move(liminf);
      result["limsup"] = std::move(limsup);
      if (!e_audit_Q.empty())
        result["audit"] = audit_to_json(audit_schedule(sched, parse_rat(e_audit_Q), parse_rat(e_tol)));
      write_text(e_out, dump(result), out);
      return;
    }
    if (e_j < 1) {
      err << "exponents: --in needs --j >= 1\n";
      rc = 64;
      return;
    }
    const PLMap map = plmap_from_json(read_json(e_in));
    const RatioExtremum ext = ratio_extrema(map, e_j);
    if (!e_csv.empty()) {
      std::ostringstream csv;
      write_ratio_csv(csv, map, e_j);
      write_text(e_csv, csv.str(), out);
    }
    write_text(e_out, dump(extrema_to_json(ext)), out);
  });

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "realize an omega profile with certificate");
  int sp_n = 0;
  std::string sp_omega, sp_audit_Q = "59049", sp_tol = "1/50", sp_out = "-";
  spectrum->add_option("--n", sp_n, "number of exponents")->required();
  spectrum->add_option("--omega", sp_omega, "omega_0..omega_{n-1}, e.g. 1,3 or 1/2,inf")
      ->required();
  spectrum->add_option("--audit-Q", sp_audit_Q, "audit window end");
  spectrum->add_option("--tol", sp_tol, "audit tolerance");
  spectrum->add_option("--out", sp_out, "output path, - for stdout");
  spectrum->callback([&] {
    ExponentProfile profile;
    profile.n = sp_n;
    for (const std::string& tok : split(sp_omega, ',')) {
      const auto w = ExtRat::try_parse(tok);
      if (!w) throw std::invalid_argument("cannot parse omega entry '" + tok + "'");
      profile.omega.push_back(*w);
    }
    if (profile.omega.size() != static_cast<std::size_t>(sp_n))
      throw std::invalid_argument("omega entry count does not match --n");
    const auto bad = check_omega_relations(profile);
    if (!bad.empty()) {
      Json fail;
      fail["admissible"] = false;
      fail["violations"] = relation_violations_to_json(bad);
      err << dump(fail);
      rc = 2;
      return;
    }
    const SpectrumCertificate cert =
        realize_spectrum(profile, parse_rat(sp_audit_Q), parse_rat(sp_tol));
    write_text(sp_out, dump(certificate_to_json(cert)), out);
  });

  // discretize
  auto* discretize_cmd = app.add_subcommand("discretize", "refine a generalized system");
  std::string d_in = "-", d_eps, d_points, d_out = "-";
  discretize_cmd->add_option("--in", d_in, "map json, - for stdin");
  discretize_cmd->add_option("--eps", d_eps, "approximate within eps (rational)");
  discretize_cmd->add_option("--points", d_points, "explicit grid, e.g. 1,3/2,2");
  discretize_cmd->add_option("--out", d_out, "output path, - for stdout");
  discretize_cmd->callback([&] {
    if (d_eps.empty() == d_points.empty()) {
      err << "discretize: pass exactly one of --eps or --points\n";
      rc = 64;
      return;
    }
    const PLMap map = plmap_from_json(read_json(d_in));
    Violation why;
    const auto sys = GenNSystem::try_validate(map, &why);
    if (!sys) {
      Json fail;
      fail["valid"] = false;
      fail["violations"] = violations_to_json({why});
      err << dump(fail);
      rc = 2;
      return;
    }
    if (!d_eps.empty()) {
      const ApproxResult res = approximate(*sys, parse_rat(d_eps));
      Json result;
      result["system"] = plmap_to_json(res.system.map(), "n-system");
      result["sup_norm"] = rat_str(res.sup_norm);
      Json grid = Json::array();
      for (const Rat& g : res.grid) grid.push_back(rat_str(g));
      result["grid"] = std::move(grid);
      write_text(d_out, dump(result), out);
    } else {
      const NSystem refined = discretize(*sys, parse_rat_list(d_points));
      write_text(d_out, dump(plmap_to_json(refined.map(), "n-system")), out);
    }
  });

  // minima
  auto* minima = app.add_subcommand("minima", "successive minima trajectory for a target vector");
  std::string m_u, m_csv, m_out = "-";
  double m_qmax = 0, m_step = 0.5, m_tail = 0.5;
  minima->add_option("--u", m_u, "target coordinates, e.g. 1,1.6180339887")->required();
  minima->add_option("--qmax", m_qmax, "largest log Q")->required();
  minima->add_option("--step", m_step, "log Q increment");
  minima->add_option("--tail", m_tail, "tail fraction for exponent estimates");
  minima->add_option("--csv", m_csv, "write the trajectory table here");
  minima->add_option("--out", m_out, "output path, - for stdout");
  minima->callback([&] {
    const TargetVector u = TargetVector::from_strings(split(m_u, ','));
    const auto trajectory = minima_trajectory(u, m_qmax, m_step);
    if (!m_csv.empty()) {
      std::ostringstream csv;
      write_minima_csv(csv, trajectory);
      write_text(m_csv, csv.str(), out);
    }
    Json result = estimate_to_json(estimate_exponents(trajectory, m_tail));
    result["points"] = trajectory.size();
    write_text(m_out, dump(result), out);
  });

  // plot
  auto* plot = app.add_subcommand("plot", "render a map or a minima trajectory as svg");
  std::string p_in, p_csv, p_out;
  SvgOptions p_opt;
  bool p_no_guides = false;
  plot->add_option("--in", p_in, "map json");
  plot->add_option("--minima-csv", p_csv, "trajectory csv from the minima command");
  plot->add_option("--out", p_out, "svg output path, - for stdout")->required();
  plot->add_option("--width", p_opt.width, "canvas width");
  plot->add_option("--height", p_opt.height, "canvas height");
  plot->add_flag("--no-guides", p_no_guides, "drop breakpoint guides");
  plot->add_flag("--slope-labels", p_opt.slope_labels, "annotate rising slopes");
  plot->callback([&] {
    if (p_in.empty() == p_csv.empty()) {
      err << "plot: pass exactly one of --in or --minima-csv\n";
      rc = 64;
      return;
    }
    p_opt.guides = !p_no_guides;
    const std::string svg = p_in.empty()
                                ? render_trajectory_svg(trajectory_from_csv(p_csv), p_opt)
                                : render_svg(plmap_from_json(read_json(p_in)), p_opt);
    write_text(p_out, svg, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 64;
  } catch (const std::exception& e) {
    Json fail;
    fail["error"] = e.what();
    err << dump(fail);
    return 2;
  }
  return rc;
}

}  // namespace nsys::cli
