#pragma once

#include <cstddef>
#include <vector>

#include "nsys/plmap.hpp"
#include "nsys/rational.hpp"
#include "nsys/simplex.hpp"
#include "nsys/systems.hpp"

namespace nsys {

// Per-block perturbation magnitudes. Harmonic: eps0/i. Geometric: eps0*rho^(i-1).
struct Perturbation {
  enum class Kind { None, Harmonic, Geometric };

  Kind kind = Kind::None;
  Rat eps0 = 0;
  Rat rho = 0;

  static Perturbation none() { return {}; }
  static Perturbation harmonic(const Rat& eps0);
  static Perturbation geometric(const Rat& eps0, const Rat& rho);

  bool active() const { return kind != Kind::None; }
  // Magnitude used for block number i (1-based). Zero when inactive.
  Rat eps(std::size_t i) const;
};

// The block map attached to a strict simplex point with >= 2 coordinates.
// Domain [n*a_1, n*a_n]; both endpoint values are constant vectors, so blocks
// can be chained with join after rescaling.
GenNSystem basic_block(const SimplexPoint& a);

// Scale domain and values by new_lo / domain_lo. Requires positive domains.
PLMap rescale(const PLMap& P, const Rat& new_lo);
NSystem rescale(const NSystem& S, const Rat& new_lo);
GenNSystem rescale(const GenNSystem& S, const Rat& new_lo);

// A cyclic list of simplex points plus a perturbation rule. Without a
// perturbation every entry must be strict or the barycenter, since only those
// produce block maps directly.
class BlockSchedule {
 public:
  BlockSchedule(int n, std::vector<SimplexPoint> cycle,
                Perturbation perturb = Perturbation::none());

  int n() const { return n_; }
  const std::vector<SimplexPoint>& cycle() const { return cycle_; }
  const Perturbation& perturbation() const { return perturb_; }

  // Cycle entry for block i (1-based, wraps around).
  const SimplexPoint& entry(std::size_t i) const;
  // Entry actually used for block i: barycenter entries stay fixed, other
  // entries are perturbed when a perturbation is configured.
  SimplexPoint effective_entry(std::size_t i) const;

 private:
  int n_;
  std::vector<SimplexPoint> cycle_;
  Perturbation perturb_;
};

struct RealizedPrefix {
  GenNSystem system;             // defined on [1, Q]
  std::vector<Rat> boundaries;   // block boundaries inside [1, Q]; first is 1, last is Q
  std::vector<SimplexPoint> used;  // effective entry of each started block
};

// Chain rescaled blocks starting at q = 1 until the domain covers [1, Q],
// then cut at Q. Barycenter entries contribute the straight segment
// P(q) = (q/n, ..., q/n) over [s, 2s]. Requires Q > 1.
RealizedPrefix realize(const BlockSchedule& schedule, const Rat& Q);

}  // namespace nsys
