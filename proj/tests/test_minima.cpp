#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nsys/minima.hpp"
#include "oracles.hpp"

using namespace nsys;

namespace {

TargetVector axis_vector(int dim) {
  std::vector<BigFloat> coords(static_cast<std::size_t>(dim), BigFloat(0));
  coords[0] = 1;
  return TargetVector(std::move(coords));
}

bool close_rel(const BigFloat& a, const BigFloat& b, double rel) {
  return abs(a - b) <= rel * (1 + abs(a));
}

}  // namespace

TEST_CASE("target vectors reject degenerate input") {
  CHECK_THROWS_AS(TargetVector::from_strings({"1"}), std::invalid_argument);
  CHECK_THROWS_AS(TargetVector::from_strings({"0", "0"}), std::invalid_argument);
  CHECK_THROWS_AS(TargetVector::from_strings({"1", "seven"}), std::invalid_argument);
  const TargetVector ok = TargetVector::from_strings({"3/5", "4/5"});
  CHECK(ok.dim() == 2);
}

TEST_CASE("an axis target has unit minima plus one of size Q") {
  for (int dim : {2, 3}) {
    const TargetVector u = axis_vector(dim);
    const BigFloat Q = 7;
    const MinimaResult res = successive_minima(u, Q);
    REQUIRE(static_cast<int>(res.lambda.size()) == dim);
    for (int j = 0; j + 1 < dim; ++j) CHECK(res.lambda[static_cast<std::size_t>(j)] == 1);
    CHECK(res.lambda.back() == Q);
    CHECK(res.certified_T >= Q);
    for (std::size_t j = 0; j < res.witnesses.size(); ++j) {
      const auto& w = res.witnesses[j];
      CHECK(oracle::gauge_raw(u.u(), Q, w) == res.lambda[j]);
      std::size_t lead = 0;
      while (lead < w.size() && w[lead] == 0) ++lead;
      REQUIRE(lead < w.size());
      CHECK(w[lead] > 0);
    }
  }
  CHECK_THROWS_AS(successive_minima(axis_vector(2), BigFloat(1) / 2), std::invalid_argument);
  CHECK_THROWS_AS(gauge(axis_vector(2), 3, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("an axis trajectory is flat below the top component") {
  const TargetVector u = axis_vector(3);
  const auto traj = minima_trajectory(u, 2.0, 0.5);
  REQUIRE(traj.size() == 5);
  for (const TrajectoryPoint& pt : traj) {
    REQUIRE(pt.L.size() == 3);
    CHECK(pt.L[0] == 0.0);
    CHECK(pt.L[1] == 0.0);
    CHECK(std::abs(pt.L[2] - pt.q) <= 1e-12);
    CHECK(pt.witnesses.size() == 3);
  }
  CHECK_THROWS_AS(minima_trajectory(u, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(minima_trajectory(u, -1.0, 0.5), std::invalid_argument);
}

TEST_CASE("golden-ratio minima respect the continued-fraction bound") {
  const TargetVector u{oracle::golden_unit()};
  for (double qd : {2.0, 5.0, 10.0, 50.0, 1000.0}) {
    const BigFloat Q = qd;
    const MinimaResult res = successive_minima(u, Q);
    const BigFloat bound = oracle::golden_lambda1_upper(Q);
    CHECK(res.lambda[0] <= bound * (1 + 1e-12));
    for (std::size_t j = 0; j < res.witnesses.size(); ++j)
      CHECK(close_rel(oracle::gauge_raw(u.u(), Q, res.witnesses[j]), res.lambda[j], 1e-12));
    // The two witnesses span the plane.
    const auto& a = res.witnesses[0];
    const auto& b = res.witnesses[1];
    CHECK(a[0] * b[1] - a[1] * b[0] != 0);
  }
}

TEST_CASE("exhaustive box search confirms small instances") {
  const TargetVector golden{oracle::golden_unit()};
  const MinimaResult g = successive_minima(golden, 6);
  const auto g_oracle = oracle::box_minima(golden.u(), 6, 8);
  REQUIRE(g_oracle.size() == 2);
  for (const BigFloat& l : g_oracle) REQUIRE(l <= 8);  // search was complete
  for (std::size_t j = 0; j < 2; ++j) CHECK(close_rel(g.lambda[j], g_oracle[j], 1e-12));

  const TargetVector skew{{BigFloat(1), sqrt(BigFloat(2)), sqrt(BigFloat(3))}};
  const MinimaResult s = successive_minima(skew, 4);
  const auto s_oracle = oracle::box_minima(skew.u(), 4, 6);
  REQUIRE(s_oracle.size() == 3);
  for (const BigFloat& l : s_oracle) REQUIRE(l <= 6);
  for (std::size_t j = 0; j < 3; ++j) CHECK(close_rel(s.lambda[j], s_oracle[j], 1e-12));
}

TEST_CASE("trajectories grow monotonically and at most by the step") {
  const TargetVector u{oracle::golden_unit()};
  const double step = 0.25;
  const auto traj = minima_trajectory(u, 6.0, step);
  REQUIRE(traj.size() == 25);
  for (std::size_t i = 0; i + 1 < traj.size(); ++i) {
    for (std::size_t j = 0; j < traj[i].L.size(); ++j) {
      const double delta = traj[i + 1].L[j] - traj[i].L[j];
      CHECK(delta >= 0.0);
      CHECK(delta <= step + 1e-9);
    }
  }
}

TEST_CASE("trajectories are deterministic and match cold starts") {
  const TargetVector u{oracle::golden_unit()};
  const auto a = minima_trajectory(u, 2.0, 0.5);
  const auto b = minima_trajectory(u, 2.0, 0.5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].L == b[i].L);
    CHECK(a[i].witnesses == b[i].witnesses);
  }
  // The warm-started tail point agrees with a from-scratch computation.
  const MinimaResult cold = successive_minima(u, exp(BigFloat(2)));
  for (std::size_t j = 0; j < cold.lambda.size(); ++j) {
    const double expected = static_cast<double>(log(cold.lambda[j]));
    CHECK(std::abs(a.back().L[j] - expected) <= 1e-12);
  }
}

TEST_CASE("tail estimates recover the golden-ratio exponent") {
  const TargetVector u{oracle::golden_unit()};
  const auto traj = minima_trajectory(u, 20.0, 0.1);
  const ExponentEstimate est = estimate_exponents(traj, 0.5);
  CHECK(est.dim == 2);
  CHECK(est.q_hi == traj.back().q);
  CHECK(est.q_lo == doctest::Approx(est.q_hi * 0.5));
  CHECK(est.psi_lower[0] >= 0.44);
  CHECK(est.psi_upper[0] <= 0.52);
  CHECK(est.psi_lower[0] <= est.psi_upper[0]);
  CHECK(est.psi_lower[1] >= 0.85);
  CHECK(est.psi_upper[1] <= 1.15);

  CHECK_THROWS_AS(estimate_exponents(traj, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(estimate_exponents(traj, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(estimate_exponents({}, 0.5), std::invalid_argument);
  // A trajectory consisting only of q = 0 has no usable tail.
  const auto degenerate = minima_trajectory(u, 0.0, 0.5);
  CHECK_THROWS_AS(estimate_exponents(degenerate, 1.0), std::invalid_argument);
}

TEST_CASE("trajectory tables carry one quoted witness per component") {
  const auto traj = minima_trajectory(axis_vector(2), 1.0, 0.5);
  std::ostringstream out;
  write_minima_csv(out, traj);
  std::istringstream lines(out.str());
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "q,L_1,L_2,w_1,w_2");
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), '"') == 4);
    CHECK(std::count(line.begin(), line.end(), ',') == 4);
  }
  CHECK(rows == traj.size());
  std::ostringstream empty_out;
  CHECK_THROWS_AS(write_minima_csv(empty_out, {}), std::invalid_argument);
}
