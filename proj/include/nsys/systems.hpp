#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsys/plmap.hpp"

namespace nsys {

enum class Axiom { S1, S2, S3, G1, G2, G3 };

std::string axiom_name(Axiom a);

struct Violation {
  Axiom axiom;
  enum class Site { Breakpoint, Segment } site;
  std::size_t index;   // breakpoint or segment index, left to right
  std::string detail;  // exact values involved
};

// Validators walk the domain left to right (breakpoint 0, segment 0,
// breakpoint 1, ...) and report the first violation they meet; with
// all_violations they keep going and report every one.
std::vector<Violation> check_nsystem(const PLMap& P, bool all_violations = false);
std::vector<Violation> check_generalized(const PLMap& P, bool all_violations = false);

// Rising block of consecutive components within one segment: components
// lo..hi (1-based) share the segment's nonzero slope, everything else is flat.
struct Band {
  int lo = 0;
  int hi = 0;
  int width() const { return hi - lo + 1; }
};

// The rising band of segment k, assuming the segment passes the generalized
// slope axiom. Empty if the slope structure is not of that shape.
std::optional<Band> segment_band(const PLMap& P, std::size_t k);

class GenNSystem;

// Map validated against the one-component-rises-at-slope-1 axioms.
class NSystem {
 public:
  static std::optional<NSystem> try_validate(PLMap P, Violation* why = nullptr);
  // For maps constructed to be valid; throws std::logic_error otherwise.
  static NSystem require(PLMap P, const char* context);
  const PLMap& map() const { return map_; }
  GenNSystem as_generalized() const;

 private:
  explicit NSystem(PLMap P) : map_(std::move(P)) {}
  PLMap map_;
};

// Map validated against the band-rises-at-slope-1/width axioms.
class GenNSystem {
 public:
  static std::optional<GenNSystem> try_validate(PLMap P, Violation* why = nullptr);
  static GenNSystem require(PLMap P, const char* context);
  const PLMap& map() const { return map_; }

 private:
  explicit GenNSystem(PLMap P) : map_(std::move(P)) {}
  PLMap map_;
};

// The n-component ramp on [a, b] (0 <= a < b): components rise one after the
// other, top first, from the constant a/n to the constant b/n; endpoints map
// to (a/n, ..., a/n) and (b/n, ..., b/n).
NSystem canonical_ramp(int n, const Rat& a, const Rat& b);

// Concatenation of systems meeting at b with the common value (b/n, ..., b/n).
NSystem join(const NSystem& f, const NSystem& g);
GenNSystem join(const GenNSystem& f, const GenNSystem& g);

}  // namespace nsys
