#pragma once

#include <string>
#include <vector>

#include "nsys/rational.hpp"

namespace nsys {

// Point of the closed ordered simplex: 0 <= a_1 <= ... <= a_m, sum = 1.
// strict() tells whether it lies in the open part (0 < a_1 < ... < a_m).
class SimplexPoint {
 public:
  explicit SimplexPoint(std::vector<Rat> coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<Rat>& coords() const { return coords_; }
  const Rat& coord(int i) const { return coords_[static_cast<std::size_t>(i - 1)]; }  // 1-based
  bool strict() const { return strict_; }
  bool barycenter() const;

  // psi_j = a_1 + ... + a_j for j = 0..m (psi_0 = 0, psi_m = 1).
  Rat psi(int j) const;
  std::vector<Rat> psi_profile() const;  // psi_1..psi_m

  // Interior perturbation (a_i + eps*i) / (1 + eps*m(m+1)/2); strict for any
  // eps > 0 and drifts to the original point as eps -> 0.
  SimplexPoint perturb(const Rat& eps) const;

  bool operator==(const SimplexPoint& other) const = default;

  static SimplexPoint barycenter_of(int m);

 private:
  std::vector<Rat> coords_;
  bool strict_ = false;
};

struct RelationViolation {
  std::string relation;  // short name of the failed inequality
  std::string detail;    // exact values involved
};

// The two monotone chains every ordered-simplex point satisfies:
//   psi_j / j nondecreasing and (1 - psi_j) / (m - j) nondecreasing,
// checked for j = 1..m-2 (plus nonnegativity). Returns the violated
// relations; empty means the point passes.
std::vector<RelationViolation> check_simplex_relations(const SimplexPoint& a);

}  // namespace nsys
