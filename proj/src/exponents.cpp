#include "nsys/exponents.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace nsys {

RatioExtremum ratio_extrema(const PLMap& P, int j) {
  if (P.domain_lo() <= 0) throw std::invalid_argument("ratio extrema need a positive domain");
  if (j < 1 || j > P.components()) throw std::invalid_argument("component index out of range");
  RatioExtremum ext;
  for (std::size_t k = 0; k < P.breakpoint_count(); ++k) {
    const Rat& q = P.breakpoint(k);
    const Rat ratio = P.prefix_sum_at(k, j) / q;
    if (k == 0 || ratio < ext.min) {
      ext.min = ratio;
      ext.argmin = {q};
    } else if (ratio == ext.min && ext.argmin.back() != q) {
      ext.argmin.push_back(q);
    }
    if (k == 0 || ratio > ext.max) {
      ext.max = ratio;
      ext.argmax = {q};
    } else if (ratio == ext.max && ext.argmax.back() != q) {
      ext.argmax.push_back(q);
    }
  }
  return ext;
}

namespace {

void require_profile_shape(int n, std::size_t size, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
  if (size != static_cast<std::size_t>(n))
    throw std::invalid_argument(std::string(what) + ": entry count does not match n");
}

}  // namespace

PsiProfile omega_to_psi(const ExponentProfile& E) {
  require_profile_shape(E.n, E.omega.size(), "omega profile");
  PsiProfile P;
  P.n = E.n;
  P.psi.reserve(E.omega.size());
  for (int k = 1; k <= E.n; ++k) {
    const ExtRat& w = E.omega[static_cast<std::size_t>(E.n - k)];
    if (!w.is_infinite() && w.finite() < 0)
      throw std::invalid_argument("omega profile entries must be >= 0");
    P.psi.push_back(w.is_infinite() ? Rat(0) : Rat(1) / (w.finite() + 1));
  }
  return P;
}

ExponentProfile psi_to_omega(const PsiProfile& P) {
  require_profile_shape(P.n, P.psi.size(), "psi profile");
  ExponentProfile E;
  E.n = P.n;
  E.omega.reserve(P.psi.size());
  for (int j = 0; j <= P.n - 1; ++j) {
    const Rat& p = P.psi[static_cast<std::size_t>(P.n - j - 1)];
    if (p < 0 || p > 1) throw std::invalid_argument("psi profile entries must lie in [0,1]");
    E.omega.push_back(p == 0 ? ExtRat::infinity() : ExtRat(Rat(1) / p - 1));
  }
  return E;
}

std::vector<RelationViolation> check_omega_relations(const ExponentProfile& E) {
  require_profile_shape(E.n, E.omega.size(), "omega profile");
  std::vector<RelationViolation> out;
  const int n = E.n;
  for (int j = 0; j < n; ++j) {
    const ExtRat& w = E.omega[static_cast<std::size_t>(j)];
    if (!w.is_infinite() && w.finite() < 0) {
      out.push_back({"omega_nonneg(" + std::to_string(j) + ")",
                     "omega_" + std::to_string(j) + " = " + w.str() + " is negative"});
    }
  }
  if (!out.empty()) return out;

  for (int j = 0; j < n; ++j) {
    const ExtRat& w = E.omega[static_cast<std::size_t>(j)];
    const Rat bound = frac(j + 1, n - j);
    if (w < ExtRat(bound)) {
      out.push_back({"omega_lower(" + std::to_string(j) + ")",
                     "omega_" + std::to_string(j) + " = " + w.str() + " < " + rat_str(bound)});
    }
  }
  for (int j = 1; j < n; ++j) {
    const ExtRat& w = E.omega[static_cast<std::size_t>(j)];
    const ExtRat& prev = E.omega[static_cast<std::size_t>(j - 1)];
    const ExtRat left =
        w.is_infinite() ? ExtRat(Rat(j)) : ExtRat(Rat(j) * w.finite() / (w.finite() + j + 1));
    if (prev < left) {
      out.push_back({"chain_left(" + std::to_string(j) + ")",
                     "omega_" + std::to_string(j - 1) + " = " + prev.str() + " < " + left.str() +
                         " forced by omega_" + std::to_string(j) + " = " + w.str()});
    }
    if (!w.is_infinite()) {
      const Rat right = (Rat(n - j) * w.finite() - 1) / Rat(n - j + 1);
      if (prev > ExtRat(right)) {
        out.push_back({"chain_right(" + std::to_string(j) + ")",
                       "omega_" + std::to_string(j - 1) + " = " + prev.str() + " > " +
                           rat_str(right) + " allowed by omega_" + std::to_string(j) + " = " +
                           w.str()});
      }
    }
  }
  return out;
}

ScheduleExponents schedule_exponents(const BlockSchedule& schedule) {
  ScheduleExponents se;
  se.n = schedule.n();
  for (int j = 1; j <= se.n; ++j) {
    Rat lo = schedule.cycle().front().psi(j);
    for (const SimplexPoint& a : schedule.cycle()) {
      const Rat v = a.psi(j);
      if (v < lo) lo = v;
    }
    se.liminf.push_back(lo);
    se.limsup.push_back(frac(j, se.n));
  }
  return se;
}

AuditReport audit_schedule(const BlockSchedule& schedule, const Rat& Q, const Rat& tol) {
  AuditReport report;
  report.Q = Q;
  report.tol = tol;
  report.liminf = schedule_exponents(schedule).liminf;
  const RealizedPrefix prefix = realize(schedule, Q);
  report.within_tol = true;
  for (int j = 1; j <= schedule.n(); ++j) {
    const RatioExtremum ext = ratio_extrema(prefix.system.map(), j);
    report.prefix_min.push_back(ext.min);
    report.prefix_max.push_back(ext.max);
    const Rat gap = ext.min - report.liminf[static_cast<std::size_t>(j - 1)];
    report.gap.push_back(gap);
    if (rat_abs(gap) > tol) report.within_tol = false;
  }
  return report;
}

void write_ratio_csv(std::ostream& out, const PLMap& P, int j) {
  if (P.domain_lo() <= 0) throw std::invalid_argument("ratio table needs a positive domain");
  if (j < 1 || j > P.components()) throw std::invalid_argument("component index out of range");
  out << "q,M,ratio,q_approx,M_approx,ratio_approx\n";
  for (std::size_t k = 0; k < P.breakpoint_count(); ++k) {
    const Rat& q = P.breakpoint(k);
    const Rat M = P.prefix_sum_at(k, j);
    const Rat ratio = M / q;
    out << rat_str(q) << ',' << rat_str(M) << ',' << rat_str(ratio) << ',' << rat_decimal(q, 12)
        << ',' << rat_decimal(M, 12) << ',' << rat_decimal(ratio, 12) << '\n';
  }
}

}  // namespace nsys
