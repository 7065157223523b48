#include "nsys/plmap.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsys {

PLMap::PLMap(std::vector<Rat> breakpoints, std::vector<std::vector<Rat>> values) {
  if (breakpoints.size() < 2) throw std::invalid_argument("PLMap needs at least two breakpoints");
  if (breakpoints.size() != values.size())
    throw std::invalid_argument("PLMap breakpoint/value count mismatch");
  n_ = static_cast<int>(values.front().size());
  if (n_ < 1) throw std::invalid_argument("PLMap needs at least one component");
  for (const auto& v : values) {
    if (static_cast<int>(v.size()) != n_)
      throw std::invalid_argument("PLMap value vectors must share one dimension");
  }
  breakpoints_.reserve(breakpoints.size());
  values_.reserve(values.size());
  for (std::size_t k = 0; k < breakpoints.size(); ++k) {
    if (!breakpoints_.empty()) {
      if (breakpoints[k] < breakpoints_.back())
        throw std::invalid_argument("PLMap breakpoints must be nondecreasing");
      if (breakpoints[k] == breakpoints_.back()) {
        if (values[k] != values_.back())
          throw std::invalid_argument("PLMap zero-length segment with conflicting values");
        continue;  // silently drop the degenerate segment
      }
    }
    breakpoints_.push_back(breakpoints[k]);
    values_.push_back(values[k]);
  }
  if (breakpoints_.size() < 2)
    throw std::invalid_argument("PLMap domain collapsed to a point");
}

bool PLMap::contains(const Rat& q) const {
  return q >= domain_lo() && q <= domain_hi();
}

std::size_t PLMap::segment_of(const Rat& q) const {
  if (!contains(q)) throw std::out_of_range("PLMap evaluation outside domain");
  // Last breakpoint <= q, clamped to a valid segment start.
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), q);
  std::size_t k = static_cast<std::size_t>(it - breakpoints_.begin());
  if (k > 0) --k;
  if (k >= segment_count()) k = segment_count() - 1;
  return k;
}

std::vector<Rat> PLMap::eval(const Rat& q) const {
  std::size_t k = segment_of(q);
  if (q == breakpoints_[k]) return values_[k];
  const Rat t = (q - breakpoints_[k]) / (breakpoints_[k + 1] - breakpoints_[k]);
  std::vector<Rat> out(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) {
    out[static_cast<std::size_t>(j)] =
        values_[k][static_cast<std::size_t>(j)] +
        t * (values_[k + 1][static_cast<std::size_t>(j)] - values_[k][static_cast<std::size_t>(j)]);
  }
  return out;
}

Rat PLMap::eval_component(const Rat& q, int j) const {
  if (j < 1 || j > n_) throw std::out_of_range("PLMap component index");
  std::size_t k = segment_of(q);
  if (q == breakpoints_[k]) return values_[k][static_cast<std::size_t>(j - 1)];
  const Rat t = (q - breakpoints_[k]) / (breakpoints_[k + 1] - breakpoints_[k]);
  return values_[k][static_cast<std::size_t>(j - 1)] +
         t * (values_[k + 1][static_cast<std::size_t>(j - 1)] -
              values_[k][static_cast<std::size_t>(j - 1)]);
}

std::vector<Rat> PLMap::segment_slopes(std::size_t k) const {
  if (k >= segment_count()) throw std::out_of_range("PLMap segment index");
  const Rat dt = breakpoints_[k + 1] - breakpoints_[k];
  std::vector<Rat> out(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) {
    out[static_cast<std::size_t>(j)] =
        (values_[k + 1][static_cast<std::size_t>(j)] - values_[k][static_cast<std::size_t>(j)]) / dt;
  }
  return out;
}

Rat PLMap::prefix_sum_at(std::size_t k, int j) const {
  if (k >= breakpoints_.size()) throw std::out_of_range("PLMap breakpoint index");
  if (j < 0 || j > n_) throw std::out_of_range("PLMap prefix length");
  Rat sum = 0;
  for (int c = 0; c < j; ++c) sum += values_[k][static_cast<std::size_t>(c)];
  return sum;
}

PLMap PLMap::restrict_to(const Rat& a, const Rat& b) const {
  if (a >= b) throw std::invalid_argument("PLMap restriction needs a < b");
  if (!contains(a) || !contains(b))
    throw std::invalid_argument("PLMap restriction outside domain");
  std::vector<Rat> bps;
  std::vector<std::vector<Rat>> vals;
  bps.push_back(a);
  vals.push_back(eval(a));
  for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
    if (breakpoints_[k] > a && breakpoints_[k] < b) {
      bps.push_back(breakpoints_[k]);
      vals.push_back(values_[k]);
    }
  }
  bps.push_back(b);
  vals.push_back(eval(b));
  return PLMap(std::move(bps), std::move(vals));
}

PLMap PLMap::concat(const PLMap& f, const PLMap& g) {
  if (f.components() != g.components())
    throw std::invalid_argument("PLMap concat dimension mismatch");
  if (f.domain_hi() != g.domain_lo())
    throw std::invalid_argument("PLMap concat domains must be adjacent");
  if (f.value_at(f.breakpoint_count() - 1) != g.value_at(0))
    throw std::invalid_argument("PLMap concat values disagree at the junction");
  const bool keep_junction =
      f.segment_slopes(f.segment_count() - 1) != g.segment_slopes(0);
  std::vector<Rat> bps(f.breakpoints_);
  std::vector<std::vector<Rat>> vals(f.values_);
  if (!keep_junction) {
    bps.pop_back();
    vals.pop_back();
  }
  for (std::size_t k = 1; k < g.breakpoints_.size(); ++k) {
    bps.push_back(g.breakpoints_[k]);
    vals.push_back(g.values_[k]);
  }
  return PLMap(std::move(bps), std::move(vals));
}

}  // namespace nsys
