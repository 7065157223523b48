#include "nsys/discretize.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsys {

Rat sup_distance(const PLMap& f, const PLMap& g) {
  if (f.components() != g.components())
    throw std::invalid_argument("sup distance needs equal component counts");
  if (f.domain_lo() != g.domain_lo() || f.domain_hi() != g.domain_hi())
    throw std::invalid_argument("sup distance needs equal domains");
  std::vector<Rat> points;
  points.reserve(f.breakpoint_count() + g.breakpoint_count());
  points.insert(points.end(), f.breakpoints().begin(), f.breakpoints().end());
  points.insert(points.end(), g.breakpoints().begin(), g.breakpoints().end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Rat best = 0;
  for (const Rat& q : points) {
    const std::vector<Rat> a = f.eval(q), b = g.eval(q);
    for (std::size_t j = 0; j < a.size(); ++j) {
      const Rat diff = rat_abs(a[j] - b[j]);
      if (diff > best) best = diff;
    }
  }
  return best;
}

NSystem discretize(const GenNSystem& S, const std::vector<Rat>& grid) {
  const PLMap& P = S.map();
  for (const Rat& q : grid)
    if (!P.contains(q))
      throw std::invalid_argument("grid point " + rat_str(q) + " lies outside the domain");

  std::vector<Rat> points = grid;
  points.insert(points.end(), P.breakpoints().begin(), P.breakpoints().end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<Rat> bps;
  std::vector<std::vector<Rat>> vals;
  for (std::size_t g = 0; g + 1 < points.size(); ++g) {
    const Rat& u = points[g];
    const Rat& v = points[g + 1];
    // Breakpoints of P are all grid points, so [u, v] sits inside one segment.
    const std::size_t seg = static_cast<std::size_t>(
        std::upper_bound(P.breakpoints().begin(), P.breakpoints().end(), u) -
        P.breakpoints().begin()) - 1;
    const std::optional<Band> band = segment_band(P, seg);
    if (!band) throw std::logic_error("valid generalized system lost its band structure");
    const std::vector<Rat> val_u = P.eval(u);
    bps.push_back(u);
    vals.push_back(val_u);
    if (band->width() == 1) continue;

    // Band components rise together from W(u) = (u - c)/m with c the sum of
    // the frozen components; splice in the m-step ramp of that height range.
    Rat c = 0;
    for (int j = 1; j <= P.components(); ++j)
      if (j < band->lo || j > band->hi) c += val_u[static_cast<std::size_t>(j - 1)];
    const int m = band->width();
    const NSystem ramp = canonical_ramp(m, u - c, v - c);
    const PLMap& R = ramp.map();
    for (std::size_t t = 1; t + 1 < R.breakpoint_count(); ++t) {
      bps.push_back(R.breakpoint(t) + c);
      std::vector<Rat> w = val_u;
      for (int j = band->lo; j <= band->hi; ++j)
        w[static_cast<std::size_t>(j - 1)] =
            R.value_at(t)[static_cast<std::size_t>(j - band->lo)];
      vals.push_back(std::move(w));
    }
  }
  bps.push_back(points.back());
  vals.push_back(P.eval(points.back()));
  return NSystem::require(PLMap(std::move(bps), std::move(vals)), "discretization");
}

ApproxResult approximate(const GenNSystem& S, const Rat& eps) {
  if (eps <= 0) throw std::invalid_argument("approximation step must be positive");
  const Rat h = eps / 2;
  const PLMap& P = S.map();
  std::vector<Rat> grid;
  // Integer multiples of h inside [lo, hi]: k from ceil(lo/h) to floor(hi/h).
  const Rat lo_ratio = P.domain_lo() / h;
  const Rat hi_ratio = P.domain_hi() / h;
  mpz_class k_lo, k_hi;
  mpz_cdiv_q(k_lo.get_mpz_t(), lo_ratio.get_num_mpz_t(), lo_ratio.get_den_mpz_t());
  mpz_fdiv_q(k_hi.get_mpz_t(), hi_ratio.get_num_mpz_t(), hi_ratio.get_den_mpz_t());
  for (mpz_class k = k_lo; k <= k_hi; ++k) grid.push_back(Rat(k) * h);
  NSystem sys = discretize(S, grid);
  Rat dist = sup_distance(P, sys.map());
  return ApproxResult{std::move(sys), std::move(dist), std::move(grid)};
}

}  // namespace nsys
