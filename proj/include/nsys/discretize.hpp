#pragma once

#include <vector>

#include "nsys/plmap.hpp"
#include "nsys/rational.hpp"
#include "nsys/systems.hpp"

namespace nsys {

// Exact sup-norm distance between two maps with the same domain and component
// count; piecewise linearity puts the maximum on the union of breakpoints.
Rat sup_distance(const PLMap& f, const PLMap& g);

// Turn a generalized system into a plain one that agrees with it on every
// grid point (plus all breakpoints, which are added automatically). Each gap
// of width-m band is replaced by an m-step ramp. Grid points must lie inside
// the domain.
NSystem discretize(const GenNSystem& S, const std::vector<Rat>& grid);

struct ApproxResult {
  NSystem system;
  Rat sup_norm;            // exact value of max_j sup_q |P_j - P'_j|
  std::vector<Rat> grid;   // the multiples of eps/2 that were used
};

// Discretize on all integer multiples of eps/2 inside the domain; the result
// stays within eps of the input in sup norm, and sup_norm certifies the
// actual distance. Requires eps > 0.
ApproxResult approximate(const GenNSystem& S, const Rat& eps);

}  // namespace nsys
