#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsys/cli.hpp"
#include "nsys/json_io.hpp"
#include "nsys/svg.hpp"

using namespace nsys;
namespace fs = std::filesystem;

namespace {

SimplexPoint sample_point() {
  return SimplexPoint({frac(1, 6), frac(1, 3), frac(1, 2)});
}

struct CliResult {
  int rc;
  std::string out, err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"nsys"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int rc = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {rc, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "nsys_io_tests";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  REQUIRE(out.good());
  out << text;
}

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = hay.find(needle); at != std::string::npos;
       at = hay.find(needle, at + needle.size()))
    ++n;
  return n;
}

Json flat_map_json() {
  Json j;
  j["breakpoints"] = Json::array({"0", "1"});
  j["values"] = Json::array({Json::array({"0", "0"}), Json::array({"0", "0"})});
  return j;
}

}  // namespace

TEST_CASE("maps survive a json round trip with their kind") {
  const PLMap map = basic_block(sample_point()).map();
  const Json plain = plmap_to_json(map);
  CHECK_FALSE(plain.contains("kind"));
  CHECK(plain["n"] == 3);
  CHECK(plain["breakpoints"].size() == 5);
  CHECK(plain["breakpoints"][0] == "1/2");
  CHECK(plmap_from_json(plain) == map);

  const Json kinded = plmap_to_json(map, "generalized");
  CHECK(kinded["kind"] == "generalized");
  CHECK(plmap_from_json(kinded) == map);
}

TEST_CASE("malformed map json is rejected") {
  Json no_bps;
  no_bps["values"] = Json::array({Json::array({"0"})});
  CHECK_THROWS_AS(plmap_from_json(no_bps), std::invalid_argument);

  Json bad_values = flat_map_json();
  bad_values["values"] = "not an array";
  CHECK_THROWS_AS(plmap_from_json(bad_values), std::invalid_argument);

  Json wrong_n = flat_map_json();
  wrong_n["n"] = 7;
  CHECK_THROWS_AS(plmap_from_json(wrong_n), std::invalid_argument);

  Json numeric = flat_map_json();
  numeric["breakpoints"] = Json::array({0, 1});
  CHECK_THROWS_AS(plmap_from_json(numeric), std::invalid_argument);
}

TEST_CASE("schedules round trip with each perturbation kind") {
  const std::vector<Perturbation> kinds{Perturbation::none(),
                                        Perturbation::harmonic(frac(1, 64)),
                                        Perturbation::geometric(frac(1, 16), frac(1, 2))};
  for (const Perturbation& pert : kinds) {
    const BlockSchedule sched(3, {sample_point(), SimplexPoint::barycenter_of(3)}, pert);
    const BlockSchedule back = schedule_from_json(schedule_to_json(sched));
    CHECK(back.n() == sched.n());
    CHECK(back.cycle() == sched.cycle());
    CHECK(back.perturbation().kind == pert.kind);
    CHECK(back.perturbation().eps0 == pert.eps0);
    CHECK(back.perturbation().rho == pert.rho);
  }

  Json bare = schedule_to_json(BlockSchedule(3, {sample_point()}, Perturbation::none()));
  bare.erase("perturbation");
  CHECK(schedule_from_json(bare).perturbation().kind == Perturbation::Kind::None);

  Json odd = schedule_to_json(BlockSchedule(3, {sample_point()}, Perturbation::none()));
  odd["perturbation"]["kind"] = "quadratic";
  CHECK_THROWS_AS(schedule_from_json(odd), std::invalid_argument);
}

TEST_CASE("profiles round trip including the infinite marker") {
  const ExponentProfile E{2, {ExtRat(Rat(1)), ExtRat::infinity()}};
  const Json j = profile_to_json(E);
  CHECK(j["omega"] == Json::array({"1", "inf"}));
  const ExponentProfile back = profile_from_json(j);
  CHECK(back.n == 2);
  CHECK(back.omega == E.omega);

  Json bad = j;
  bad["omega"][1] = "nope";
  CHECK_THROWS_AS(profile_from_json(bad), std::invalid_argument);
  Json missing;
  missing["omega"] = Json::array({"1"});
  CHECK_THROWS_AS(profile_from_json(missing), std::invalid_argument);
}

TEST_CASE("violation and relation reports carry their tags") {
  const PLMap flat = plmap_from_json(flat_map_json());
  const Json v = violations_to_json(check_nsystem(flat, true));
  REQUIRE(v.size() == 3);
  CHECK(v[0]["axiom"] == "S1");
  CHECK(v[0]["site"] == "segment");
  CHECK(v[0]["index"] == 0);
  CHECK(v[0]["detail"].get<std::string>().size() > 0);

  const Json r = relation_violations_to_json(
      check_omega_relations({2, {ExtRat(Rat(5)), ExtRat(Rat(2))}}));
  REQUIRE(r.size() == 1);
  CHECK(r[0]["relation"] == "chain_right(1)");
}

TEST_CASE("certificates, extrema, and estimates serialize completely") {
  const SpectrumCertificate cert = realize_spectrum({2, {ExtRat(Rat(1)), ExtRat(Rat(3))}});
  const Json c = certificate_to_json(cert);
  CHECK(c["omega"] == Json::array({"1", "3"}));
  CHECK(c["psi_lower"] == Json::array({"1/4", "1/2"}));
  CHECK(c["schedule"]["perturbation"]["kind"] == "harmonic");
  CHECK(c["schedule"]["perturbation"]["eps0"] == "1/512");
  CHECK(c["roundtrip_exact"] == true);
  CHECK(c["uniform_upper"] == true);
  CHECK(c["audit"]["Q"] == "59049");
  CHECK(c["audit"]["within_tol"] == true);
  CHECK(c["omega_hat_realized"] == Json::array({"1/2", "2"}));

  const Json e = extrema_to_json(ratio_extrema(basic_block(sample_point()).map(), 1));
  CHECK(e["min"] == "1/6");
  CHECK(e["max"] == "1/3");
  CHECK(e["argmin"] == Json::array({"1"}));
  CHECK(e["argmax"] == Json::array({"1/2", "3/2"}));

  const Json est = estimate_to_json(ExponentEstimate{2, 1.0, 2.0, {0.5}, {0.6}});
  CHECK(est["dim"] == 2);
  CHECK(est["q_lo"] == 1.0);
  CHECK(est["psi_upper"] == Json::array({0.6}));
}

TEST_CASE("svg rendering is deterministic") {
  const PLMap map = basic_block(sample_point()).map();
  const std::string one = render_svg(map);
  CHECK(one == render_svg(map));
  CHECK(one.rfind("<svg", 0) == 0);
  CHECK(count_of(one, "<polyline") == 3);
  CHECK(one.find("stroke-dasharray") != std::string::npos);

  SvgOptions bare;
  bare.guides = false;
  CHECK(render_svg(map, bare).find("stroke-dasharray") == std::string::npos);

  SvgOptions labeled;
  labeled.slope_labels = true;
  CHECK(render_svg(map, labeled).size() > one.size());

  const auto traj = minima_trajectory(TargetVector({BigFloat(1), BigFloat(0)}), 1.0, 0.5);
  const std::string t = render_trajectory_svg(traj);
  CHECK(t == render_trajectory_svg(traj));
  CHECK(t.rfind("<svg", 0) == 0);
  CHECK(count_of(t, "<polyline") == 2);
}

TEST_CASE("cli round trip: ramp, validate, plot") {
  const fs::path dir = scratch_dir();
  const std::string ramp_path = (dir / "ramp.json").string();

  const CliResult ramp = run_cli({"ramp", "--n", "3", "--a", "1/2", "--b", "3",
                                  "--out", ramp_path});
  REQUIRE(ramp.rc == 0);
  const Json stored = Json::parse(slurp(ramp_path));
  CHECK(stored["kind"] == "n-system");

  const CliResult ok = run_cli({"validate", "--in", ramp_path});
  CHECK(ok.rc == 0);
  CHECK(Json::parse(ok.out)["kind"] == "n-system");

  const std::string svg_path = (dir / "ramp.svg").string();
  const CliResult plot = run_cli({"plot", "--in", ramp_path, "--out", svg_path});
  CHECK(plot.rc == 0);
  CHECK(slurp(svg_path).rfind("<svg", 0) == 0);
}

TEST_CASE("cli validation failures land on err with exit code 2") {
  const fs::path dir = scratch_dir();
  const std::string flat_path = (dir / "flat.json").string();
  spill(flat_path, flat_map_json().dump());

  const CliResult res = run_cli({"validate", "--in", flat_path, "--all"});
  CHECK(res.rc == 2);
  CHECK(res.out.empty());
  const Json report = Json::parse(res.err);
  CHECK(report["valid"] == false);
  CHECK(report["violations"].size() >= 1);
}

TEST_CASE("cli usage errors return 64") {
  CHECK(run_cli({"exponents", "--schedule", "a.json", "--in", "b.json"}).rc == 64);
  CHECK(run_cli({"exponents", "--in", "b.json"}).rc == 64);  // missing --j
  CHECK(run_cli({"validate", "--bogus"}).rc == 64);
  CHECK(run_cli({}).rc == 64);  // a subcommand is required
  CHECK(run_cli({"discretize", "--in", "x.json"}).rc == 64);
  CHECK(run_cli({"plot", "--out", "x.svg"}).rc == 64);

  const CliResult help = run_cli({"--help"});
  CHECK(help.rc == 0);
  CHECK(help.out.find("validate") != std::string::npos);
}

TEST_CASE("cli spectrum certifies admissible profiles and rejects the rest") {
  const fs::path dir = scratch_dir();
  const std::string cert_path = (dir / "cert.json").string();

  const CliResult good = run_cli({"spectrum", "--n", "2", "--omega", "1,3",
                                  "--out", cert_path});
  REQUIRE(good.rc == 0);
  const Json cert = Json::parse(slurp(cert_path));
  CHECK(cert["roundtrip_exact"] == true);
  CHECK(cert["psi_liminf"] == Json::array({"1/4", "1/2", "1"}));

  const CliResult bad = run_cli({"spectrum", "--n", "2", "--omega", "2/5,10"});
  CHECK(bad.rc == 2);
  const Json report = Json::parse(bad.err);
  CHECK(report["admissible"] == false);
  CHECK(report["violations"].size() >= 1);
}

TEST_CASE("cli schedule, exponents, realize agree on the sample block") {
  const fs::path dir = scratch_dir();
  const std::string sched_path = (dir / "sched.json").string();

  REQUIRE(run_cli({"schedule", "--n", "3", "--cycle", "1/6,1/3,1/2",
                   "--out", sched_path}).rc == 0);

  const CliResult exp = run_cli({"exponents", "--schedule", sched_path,
                                 "--audit-Q", "81", "--tol", "1/10"});
  REQUIRE(exp.rc == 0);
  const Json report = Json::parse(exp.out);
  CHECK(report["liminf"] == Json::array({"1/6", "1/2", "1"}));
  CHECK(report["limsup"] == Json::array({"1/3", "2/3", "1"}));
  CHECK(report["audit"]["within_tol"] == true);

  const CliResult real = run_cli({"realize", "--schedule", sched_path, "--Q", "9"});
  REQUIRE(real.rc == 0);
  const Json prefix = Json::parse(real.out);
  CHECK(prefix["boundaries"] == Json::array({"1", "3", "9"}));
  CHECK(prefix["system"]["kind"] == "generalized");
}

TEST_CASE("cli exponents reports map extrema and writes the ratio table") {
  const fs::path dir = scratch_dir();
  const std::string block_path = (dir / "block.json").string();
  const std::string csv_path = (dir / "ratios.csv").string();

  REQUIRE(run_cli({"block", "--a", "1/6,1/3,1/2", "--out", block_path}).rc == 0);
  CHECK(Json::parse(slurp(block_path))["kind"] == "generalized");

  const CliResult ext = run_cli({"exponents", "--in", block_path, "--j", "1",
                                 "--csv", csv_path});
  REQUIRE(ext.rc == 0);
  CHECK(Json::parse(ext.out)["min"] == "1/6");
  CHECK(slurp(csv_path).rfind("q,", 0) == 0);
}

TEST_CASE("cli discretize approximates generalized systems") {
  const fs::path dir = scratch_dir();
  const std::string diag_path = (dir / "diag.json").string();
  Json diag;
  diag["breakpoints"] = Json::array({"0", "2"});
  diag["values"] = Json::array({Json::array({"0", "0"}), Json::array({"1", "1"})});
  spill(diag_path, diag.dump());

  const CliResult res = run_cli({"discretize", "--in", diag_path, "--eps", "1/2"});
  REQUIRE(res.rc == 0);
  const Json report = Json::parse(res.out);
  CHECK(report["system"]["kind"] == "n-system");
  CHECK(parse_rat(report["sup_norm"].get<std::string>()) <= frac(1, 2));
  CHECK(report["grid"].size() >= 2);

  const CliResult pts = run_cli({"discretize", "--in", diag_path, "--points", "1"});
  CHECK(pts.rc == 0);
  CHECK(Json::parse(pts.out)["kind"] == "n-system");

  const std::string flat_path = (dir / "flat2.json").string();
  spill(flat_path, flat_map_json().dump());
  const CliResult bad = run_cli({"discretize", "--in", flat_path, "--eps", "1/2"});
  CHECK(bad.rc == 2);
  CHECK(Json::parse(bad.err)["valid"] == false);
}

TEST_CASE("cli minima writes estimates and a loadable table") {
  const fs::path dir = scratch_dir();
  const std::string csv_path = (dir / "minima.csv").string();

  const CliResult res = run_cli({"minima", "--u", "1,0", "--qmax", "1",
                                 "--step", "0.5", "--csv", csv_path});
  REQUIRE(res.rc == 0);
  const Json report = Json::parse(res.out);
  CHECK(report["dim"] == 2);
  CHECK(report["points"] == 3);
  CHECK(slurp(csv_path).rfind("q,L_1,L_2,w_1,w_2", 0) == 0);

  const CliResult plot = run_cli({"plot", "--minima-csv", csv_path, "--out", "-"});
  CHECK(plot.rc == 0);
  CHECK(plot.out.rfind("<svg", 0) == 0);
}
