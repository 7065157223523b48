#pragma once

#include <cstddef>
#include <vector>

#include "nsys/rational.hpp"

namespace nsys {

// Continuous piecewise-linear map [t_0, t_m] -> R^n with exact rational
// breakpoints and values. Stored as breakpoints plus the value vector at each
// breakpoint; slopes are derived. Invariants after construction:
//   - at least two breakpoints, strictly increasing,
//   - one value vector per breakpoint, all of the same dimension n >= 1.
// Zero-length segments in the input are dropped when both endpoints carry the
// same values; conflicting values across a zero-length segment are an error
// (they would encode a discontinuity).
class PLMap {
 public:
  PLMap(std::vector<Rat> breakpoints, std::vector<std::vector<Rat>> values);

  int components() const { return n_; }
  std::size_t breakpoint_count() const { return breakpoints_.size(); }
  std::size_t segment_count() const { return breakpoints_.size() - 1; }
  const std::vector<Rat>& breakpoints() const { return breakpoints_; }
  const std::vector<std::vector<Rat>>& values() const { return values_; }
  const Rat& breakpoint(std::size_t k) const { return breakpoints_[k]; }
  const std::vector<Rat>& value_at(std::size_t k) const { return values_[k]; }
  const Rat& domain_lo() const { return breakpoints_.front(); }
  const Rat& domain_hi() const { return breakpoints_.back(); }
  bool contains(const Rat& q) const;

  // Exact evaluation; q must lie in the domain.
  std::vector<Rat> eval(const Rat& q) const;
  Rat eval_component(const Rat& q, int j) const;  // j is 1-based

  // Slope vector of segment k (between breakpoints k and k+1).
  std::vector<Rat> segment_slopes(std::size_t k) const;

  // Sum of the first j components at breakpoint k (j = 0..n).
  Rat prefix_sum_at(std::size_t k, int j) const;

  // Restriction to [a, b] within the domain; endpoints become breakpoints.
  PLMap restrict_to(const Rat& a, const Rat& b) const;

  // Concatenation of adjacent maps: f ends where g starts and both agree
  // there. The shared breakpoint is kept only if the slope changes across it.
  static PLMap concat(const PLMap& f, const PLMap& g);

  bool operator==(const PLMap& other) const = default;

 private:
  int n_ = 0;
  std::vector<Rat> breakpoints_;
  std::vector<std::vector<Rat>> values_;

  // Index of the segment containing q (ties resolved to the left segment for
  // interior breakpoints).
  std::size_t segment_of(const Rat& q) const;
};

}  // namespace nsys
