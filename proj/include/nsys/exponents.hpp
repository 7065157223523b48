#pragma once

#include <iosfwd>
#include <vector>

#include "nsys/blocks.hpp"
#include "nsys/extrat.hpp"
#include "nsys/plmap.hpp"
#include "nsys/rational.hpp"
#include "nsys/simplex.hpp"

namespace nsys {

// Extrema of q^{-1} M_j(q) with M_j = P_1 + ... + P_j. On each segment the
// ratio is rho + alpha/q, monotone, so breakpoints carry the extrema; the
// witness lists hold every breakpoint attaining them, in domain order.
struct RatioExtremum {
  Rat min, max;
  std::vector<Rat> argmin, argmax;
};

// Requires domain_lo > 0 and 1 <= j <= components.
RatioExtremum ratio_extrema(const PLMap& P, int j);

// omega[j] = omega_j for j = 0..n-1.
struct ExponentProfile {
  int n = 0;
  std::vector<ExtRat> omega;
};

// psi[k-1] = psi_k for k = 1..n, each in [0,1].
struct PsiProfile {
  int n = 0;
  std::vector<Rat> psi;
};

// Index-reversing dictionary psi_k = 1/(omega_{n-k} + 1); infinite omega maps
// to psi = 0 and back. Inputs outside [0, inf] resp. [0,1] are rejected.
PsiProfile omega_to_psi(const ExponentProfile& E);
ExponentProfile psi_to_omega(const PsiProfile& P);

// Admissibility of an omega profile: omega_j >= (j+1)/(n-j) for all j, and
// for 1 <= j <= n-1 the chain
//   j*omega_j / (omega_j + j + 1) <= omega_{j-1} <= ((n-j)*omega_j - 1) / (n-j+1),
// with the left side read as j and the right side dropped when omega_j is
// infinite. Empty result means admissible.
std::vector<RelationViolation> check_omega_relations(const ExponentProfile& E);

// Limit exponents of the infinite realization of a schedule: liminf_j is the
// smallest psi_j over the unperturbed cycle entries, limsup_j is j/n.
struct ScheduleExponents {
  int n = 0;
  std::vector<Rat> liminf, limsup;
};

ScheduleExponents schedule_exponents(const BlockSchedule& schedule);

// Finite-window check: realize the schedule on [1, Q] and compare observed
// ratio extrema against the limit exponents. gap[j-1] = prefix_min - liminf.
struct AuditReport {
  Rat Q;
  std::vector<Rat> liminf, prefix_min, prefix_max, gap;
  Rat tol;
  bool within_tol = false;
};

AuditReport audit_schedule(const BlockSchedule& schedule, const Rat& Q, const Rat& tol);

// Table of q, M_j(q), M_j(q)/q at every breakpoint, exact plus 12-digit
// decimal columns.
void write_ratio_csv(std::ostream& out, const PLMap& P, int j);

}  // namespace nsys
