#pragma once

#include <vector>

#include "nsys/blocks.hpp"
#include "nsys/exponents.hpp"
#include "nsys/rational.hpp"
#include "nsys/simplex.hpp"

namespace nsys {

// Feasibility of a lower psi profile (n entries, realized by systems with
// n+1 components): each psi_j in [0,1], psi_n <= n/(n+1), and for
// 1 <= j <= n-1
//   psi_j / j <= psi_{j+1} / (j+1)
//   (1 - psi_j) / (n+1-j) <= (1 - psi_{j+1}) / (n-j).
// Empty result means the profile is buildable.
std::vector<RelationViolation> check_psi_hypotheses(const PsiProfile& P);

// Finite set of simplex points in n+1 coordinates whose entry-wise minima of
// psi_j equal the profile exactly (verified internally). Throws
// std::invalid_argument when the hypotheses fail.
std::vector<SimplexPoint> build_entry_set(const PsiProfile& P);

// Reorder entries so that points pinning many still-unserved minima come
// first; ties prefer smaller first coordinate, then construction order.
// Early coverage keeps finite-window audits close to the limit values.
std::vector<SimplexPoint> cover_greedy_order(const std::vector<SimplexPoint>& entries,
                                             const PsiProfile& P);

// Both sides of the equivalence "omega profile admissible <=> converted psi
// profile buildable". consistent is the claim under test.
struct BridgeReport {
  bool omega_admissible = false;
  bool psi_buildable = false;
  bool consistent = false;
  std::vector<RelationViolation> omega_violations, psi_violations;
};

BridgeReport verify_hypothesis_bridge(const ExponentProfile& E);

struct SpectrumCertificate {
  ExponentProfile omega;               // requested profile
  PsiProfile psi_lower;                // dictionary image of the request
  std::vector<SimplexPoint> entries;   // constructed entry set
  BlockSchedule schedule;              // cover-greedy cycle over the entries
  std::vector<Rat> psi_liminf, psi_limsup;  // limits of the realization, j = 1..n+1
  ExponentProfile omega_realized;      // dictionary image of the liminf values
  ExponentProfile omega_hat_realized;  // dictionary image of the limsup values
  AuditReport audit;
  bool roundtrip_exact = false;        // omega_realized == omega
  bool uniform_upper = false;          // omega_hat_j == (j+1)/(n-j) for all j
};

// Realize an admissible omega profile by a block schedule and certify it:
// exact limits plus a finite audit window [1, audit_Q]. Entries that are
// neither strict nor the barycenter force a harmonic perturbation with
// eps0 = 1/512, small enough to keep audit gaps within the default tolerance.
// Throws std::invalid_argument when the profile is not admissible.
SpectrumCertificate realize_spectrum(const ExponentProfile& omega,
                                     const Rat& audit_Q = Rat(59049),
                                     const Rat& tol = Rat(1, 50));

}  // namespace nsys
