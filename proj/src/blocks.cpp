#include "nsys/blocks.hpp"

#include <stdexcept>
#include <utility>

namespace nsys {

Perturbation Perturbation::harmonic(const Rat& eps0) {
  if (eps0 <= 0) throw std::invalid_argument("harmonic perturbation needs eps0 > 0");
  Perturbation p;
  p.kind = Kind::Harmonic;
  p.eps0 = eps0;
  return p;
}

Perturbation Perturbation::geometric(const Rat& eps0, const Rat& rho) {
  if (eps0 <= 0) throw std::invalid_argument("geometric perturbation needs eps0 > 0");
  if (rho <= 0 || rho >= 1) throw std::invalid_argument("geometric perturbation needs 0 < rho < 1");
  Perturbation p;
  p.kind = Kind::Geometric;
  p.eps0 = eps0;
  p.rho = rho;
  return p;
}

Rat Perturbation::eps(std::size_t i) const {
  if (i == 0) throw std::invalid_argument("block numbers are 1-based");
  switch (kind) {
    case Kind::None: return 0;
    case Kind::Harmonic: return eps0 / Rat(static_cast<unsigned long>(i));
    case Kind::Geometric: {
      Rat power = 1;
      for (std::size_t k = 1; k < i; ++k) power *= rho;
      return eps0 * power;
    }
  }
  return 0;
}

GenNSystem basic_block(const SimplexPoint& a) {
  const int n = a.dim();
  if (n < 2 || !a.strict())
    throw std::invalid_argument("basic block needs a strict point with at least two coordinates");

  std::vector<Rat> bps;
  std::vector<std::vector<Rat>> vals;
  bps.reserve(static_cast<std::size_t>(2 * n - 1));
  vals.reserve(static_cast<std::size_t>(2 * n - 1));

  // First leg: q_i = a_1 + ... + a_i + (n-i) a_i, value has a_1..a_i settled
  // and the rest pinned at a_i.
  Rat prefix = 0;
  for (int i = 1; i <= n; ++i) {
    prefix += a.coord(i);
    bps.push_back(prefix + Rat(n - i) * a.coord(i));
    std::vector<Rat> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) v.push_back(a.coord(j <= i ? j : i));
    vals.push_back(std::move(v));
  }
  // Second leg: q_{n+i} = i a_{i+1} + (a_{i+1} + ... + a_n), low coordinates
  // catch up to a_{i+1} one breakpoint at a time.
  Rat suffix = prefix;  // coordinate sum, = 1
  for (int i = 1; i <= n - 1; ++i) {
    suffix -= a.coord(i);  // now a_{i+1} + ... + a_n
    bps.push_back(Rat(i) * a.coord(i + 1) + suffix);
    std::vector<Rat> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) v.push_back(j <= i + 1 ? a.coord(i + 1) : a.coord(j));
    vals.push_back(std::move(v));
  }
  return GenNSystem::require(PLMap(std::move(bps), std::move(vals)), "basic block");
}

PLMap rescale(const PLMap& P, const Rat& new_lo) {
  if (P.domain_lo() <= 0) throw std::invalid_argument("rescale needs a positive domain");
  if (new_lo <= 0) throw std::invalid_argument("rescale needs new_lo > 0");
  const Rat c = new_lo / P.domain_lo();
  std::vector<Rat> bps;
  std::vector<std::vector<Rat>> vals;
  bps.reserve(P.breakpoint_count());
  vals.reserve(P.breakpoint_count());
  for (std::size_t k = 0; k < P.breakpoint_count(); ++k) {
    bps.push_back(c * P.breakpoint(k));
    std::vector<Rat> v = P.value_at(k);
    for (Rat& x : v) x *= c;
    vals.push_back(std::move(v));
  }
  return PLMap(std::move(bps), std::move(vals));
}

NSystem rescale(const NSystem& S, const Rat& new_lo) {
  return NSystem::require(rescale(S.map(), new_lo), "rescale");
}

GenNSystem rescale(const GenNSystem& S, const Rat& new_lo) {
  return GenNSystem::require(rescale(S.map(), new_lo), "rescale");
}

BlockSchedule::BlockSchedule(int n, std::vector<SimplexPoint> cycle, Perturbation perturb)
    : n_(n), cycle_(std::move(cycle)), perturb_(perturb) {
  if (n_ < 1) throw std::invalid_argument("schedule needs n >= 1");
  if (cycle_.empty()) throw std::invalid_argument("schedule needs a nonempty cycle");
  for (const SimplexPoint& a : cycle_) {
    if (a.dim() != n_) throw std::invalid_argument("cycle entry dimension does not match n");
    if (!perturb_.active() && !a.strict() && !a.barycenter())
      throw std::invalid_argument(
          "without a perturbation every cycle entry must be strict or the barycenter");
  }
}

const SimplexPoint& BlockSchedule::entry(std::size_t i) const {
  if (i == 0) throw std::invalid_argument("block numbers are 1-based");
  return cycle_[(i - 1) % cycle_.size()];
}

SimplexPoint BlockSchedule::effective_entry(std::size_t i) const {
  const SimplexPoint& a = entry(i);
  if (a.barycenter() || !perturb_.active()) return a;
  return a.perturb(perturb_.eps(i));
}

namespace {

PLMap straight_piece(int n, const Rat& s) {
  std::vector<Rat> level_lo(static_cast<std::size_t>(n), s / n);
  std::vector<Rat> level_hi(static_cast<std::size_t>(n), 2 * s / n);
  return PLMap({s, 2 * s}, {std::move(level_lo), std::move(level_hi)});
}

}  // namespace

RealizedPrefix realize(const BlockSchedule& schedule, const Rat& Q) {
  if (Q <= 1) throw std::invalid_argument("realize needs Q > 1");
  std::optional<PLMap> acc;
  std::vector<Rat> boundaries{Rat(1)};
  std::vector<SimplexPoint> used;
  Rat s = 1;
  for (std::size_t i = 1; s < Q; ++i) {
    SimplexPoint e = schedule.effective_entry(i);
    PLMap piece = e.barycenter() ? straight_piece(schedule.n(), s)
                                 : rescale(basic_block(e).map(), s);
    used.push_back(std::move(e));
    s = piece.domain_hi();
    boundaries.push_back(s);
    acc = acc ? PLMap::concat(*acc, piece) : std::move(piece);
  }
  if (boundaries.back() > Q) boundaries.back() = Q;
  return RealizedPrefix{GenNSystem::require(acc->restrict_to(1, Q), "realized prefix"),
                        std::move(boundaries), std::move(used)};
}

}  // namespace nsys
