#include "nsys/spectrum.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nsys {

std::vector<RelationViolation> check_psi_hypotheses(const PsiProfile& P) {
  if (P.n < 1) throw std::invalid_argument("psi profile: n must be >= 1");
  if (P.psi.size() != static_cast<std::size_t>(P.n))
    throw std::invalid_argument("psi profile: entry count does not match n");
  std::vector<RelationViolation> out;
  const int n = P.n;
  for (int j = 1; j <= n; ++j) {
    const Rat& p = P.psi[static_cast<std::size_t>(j - 1)];
    if (p < 0 || p > 1)
      out.push_back({"psi_range(" + std::to_string(j) + ")",
                     "psi_" + std::to_string(j) + " = " + rat_str(p) + " is outside [0,1]"});
  }
  if (!out.empty()) return out;

  const Rat cap = frac(n, n + 1);
  if (P.psi.back() > cap) {
    out.push_back({"psi_cap", "psi_" + std::to_string(n) + " = " + rat_str(P.psi.back()) +
                                  " > " + rat_str(cap)});
  }
  for (int j = 1; j <= n - 1; ++j) {
    const Rat& a = P.psi[static_cast<std::size_t>(j - 1)];
    const Rat& b = P.psi[static_cast<std::size_t>(j)];
    if (a / j > b / (j + 1)) {
      out.push_back({"psi_ratio(" + std::to_string(j) + ")",
                     "psi_" + std::to_string(j) + "/" + std::to_string(j) + " = " +
                         rat_str(a / j) + " > psi_" + std::to_string(j + 1) + "/" +
                         std::to_string(j + 1) + " = " + rat_str(b / (j + 1))});
    }
    if ((1 - a) / (n + 1 - j) > (1 - b) / (n - j)) {
      out.push_back({"co_psi_ratio(" + std::to_string(j) + ")",
                     "(1-psi_" + std::to_string(j) + ")/" + std::to_string(n + 1 - j) + " = " +
                         rat_str((1 - a) / (n + 1 - j)) + " > (1-psi_" + std::to_string(j + 1) +
                         ")/" + std::to_string(n - j) + " = " + rat_str((1 - b) / (n - j))});
    }
  }
  return out;
}

std::vector<SimplexPoint> build_entry_set(const PsiProfile& P) {
  const auto bad = check_psi_hypotheses(P);
  if (!bad.empty())
    throw std::invalid_argument("psi profile is not buildable: " + bad.front().relation + ": " +
                                bad.front().detail);
  const int n = P.n;
  std::vector<SimplexPoint> out;
  auto add = [&out](std::vector<Rat> coords) {
    SimplexPoint p(std::move(coords));
    for (const SimplexPoint& seen : out)
      if (seen == p) return;
    out.push_back(std::move(p));
  };
  if (n == 1) {
    add({P.psi[0], 1 - P.psi[0]});
  } else {
    // Entry k pins psi_k and psi_{k+1} simultaneously: k leading coordinates
    // at psi_k/k, one middle coordinate, n-k trailing at (1-psi_{k+1})/(n-k).
    for (int k = 1; k <= n - 1; ++k) {
      const Rat c = P.psi[static_cast<std::size_t>(k - 1)] / k;
      const Rat mid =
          P.psi[static_cast<std::size_t>(k)] - P.psi[static_cast<std::size_t>(k - 1)];
      const Rat d = (1 - P.psi[static_cast<std::size_t>(k)]) / (n - k);
      std::vector<Rat> coords;
      coords.reserve(static_cast<std::size_t>(n + 1));
      for (int i = 0; i < k; ++i) coords.push_back(c);
      coords.push_back(mid);
      for (int i = 0; i < n - k; ++i) coords.push_back(d);
      add(std::move(coords));
    }
  }
  for (int j = 1; j <= n; ++j) {
    Rat lo = out.front().psi(j);
    for (const SimplexPoint& p : out) {
      const Rat v = p.psi(j);
      if (v < lo) lo = v;
    }
    if (lo != P.psi[static_cast<std::size_t>(j - 1)])
      throw std::logic_error("entry set does not attain the requested minimum at j = " +
                             std::to_string(j));
  }
  return out;
}

std::vector<SimplexPoint> cover_greedy_order(const std::vector<SimplexPoint>& entries,
                                             const PsiProfile& P) {
  const int n = P.n;
  std::vector<std::vector<int>> covers(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (int j = 1; j <= n; ++j)
      if (entries[i].psi(j) == P.psi[static_cast<std::size_t>(j - 1)]) covers[i].push_back(j);

  std::vector<bool> taken(entries.size(), false), served(static_cast<std::size_t>(n + 1), false);
  std::vector<SimplexPoint> out;
  out.reserve(entries.size());
  auto unserved_count = [&](std::size_t i) {
    int c = 0;
    for (int j : covers[i])
      if (!served[static_cast<std::size_t>(j)]) ++c;
    return c;
  };
  for (;;) {
    int best = -1, best_gain = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (taken[i]) continue;
      const int gain = unserved_count(i);
      if (gain == 0) continue;
      if (best < 0 || gain > best_gain ||
          (gain == best_gain &&
           entries[i].coord(1) < entries[static_cast<std::size_t>(best)].coord(1))) {
        best = static_cast<int>(i);
        best_gain = gain;
      }
    }
    if (best < 0) break;
    taken[static_cast<std::size_t>(best)] = true;
    out.push_back(entries[static_cast<std::size_t>(best)]);
    for (int j : covers[static_cast<std::size_t>(best)]) served[static_cast<std::size_t>(j)] = true;
  }
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (!taken[i]) out.push_back(entries[i]);
  return out;
}

BridgeReport verify_hypothesis_bridge(const ExponentProfile& E) {
  for (const ExtRat& w : E.omega)
    if (!w.is_infinite() && w.finite() < 0)
      throw std::invalid_argument("bridge check needs omega entries >= 0");
  BridgeReport report;
  report.omega_violations = check_omega_relations(E);
  report.psi_violations = check_psi_hypotheses(omega_to_psi(E));
  report.omega_admissible = report.omega_violations.empty();
  report.psi_buildable = report.psi_violations.empty();
  report.consistent = report.omega_admissible == report.psi_buildable;
  return report;
}

SpectrumCertificate realize_spectrum(const ExponentProfile& omega, const Rat& audit_Q,
                                     const Rat& tol) {
  const auto bad = check_omega_relations(omega);
  if (!bad.empty())
    throw std::invalid_argument("omega profile is not admissible: " + bad.front().relation +
                                ": " + bad.front().detail);
  const PsiProfile psi = omega_to_psi(omega);
  const int n = psi.n;
  std::vector<SimplexPoint> entries = build_entry_set(psi);
  std::vector<SimplexPoint> cycle = cover_greedy_order(entries, psi);

  bool need_perturbation = false;
  for (const SimplexPoint& e : cycle)
    if (!e.strict() && !e.barycenter()) need_perturbation = true;
  const Perturbation pert =
      need_perturbation ? Perturbation::harmonic(Rat(1, 512)) : Perturbation::none();

  BlockSchedule schedule(n + 1, std::move(cycle), pert);
  const ScheduleExponents limits = schedule_exponents(schedule);

  auto head = [n](const std::vector<Rat>& v) {
    return std::vector<Rat>(v.begin(), v.begin() + n);
  };
  const ExponentProfile omega_realized = psi_to_omega({n, head(limits.liminf)});
  const ExponentProfile omega_hat = psi_to_omega({n, head(limits.limsup)});

  bool uniform_upper = true;
  for (int j = 0; j < n; ++j)
    if (omega_hat.omega[static_cast<std::size_t>(j)] != ExtRat(frac(j + 1, n - j)))
      uniform_upper = false;

  SpectrumCertificate cert{omega,
                           psi,
                           std::move(entries),
                           schedule,
                           limits.liminf,
                           limits.limsup,
                           omega_realized,
                           omega_hat,
                           audit_schedule(schedule, audit_Q, tol),
                           omega_realized.omega == omega.omega,
                           uniform_upper};
  return cert;
}

}  // namespace nsys
