#include "nsys/systems.hpp"

#include <stdexcept>

namespace nsys {

namespace {

Axiom axiom_of(bool generalized, int which) {
  switch (which) {
    case 1: return generalized ? Axiom::G1 : Axiom::S1;
    case 2: return generalized ? Axiom::G2 : Axiom::S2;
    default: return generalized ? Axiom::G3 : Axiom::S3;
  }
}

class Checker {
 public:
  Checker(const PLMap& P, bool generalized, bool all)
      : P_(P), generalized_(generalized), all_(all) {}

  std::vector<Violation> run() {
    check_breakpoint(0);
    for (std::size_t k = 0; k < P_.segment_count() && keep_going(); ++k) {
      check_segment(k);
      if (!keep_going()) break;
      check_breakpoint(k + 1);
      if (!keep_going()) break;
      if (k + 2 <= P_.segment_count()) check_junction(k + 1);
    }
    return std::move(found_);
  }

 private:
  bool keep_going() const { return all_ || found_.empty(); }

  void report(int which, Violation::Site site, std::size_t index, std::string detail) {
    found_.push_back({axiom_of(generalized_, which), site, index, std::move(detail)});
  }

  // Ordering 0 <= P_1 <= ... <= P_n and sum = q, at breakpoint k.
  void check_breakpoint(std::size_t k) {
    const auto& v = P_.value_at(k);
    const Rat& q = P_.breakpoint(k);
    if (v.front() < 0) {
      report(1, Violation::Site::Breakpoint, k,
             "P_1(" + rat_str(q) + ") = " + rat_str(v.front()) + " < 0");
      if (!all_) return;
    }
    for (std::size_t j = 1; j < v.size(); ++j) {
      if (v[j] < v[j - 1]) {
        report(1, Violation::Site::Breakpoint, k,
               "P_" + std::to_string(j + 1) + "(" + rat_str(q) + ") = " + rat_str(v[j]) +
                   " < P_" + std::to_string(j) + " = " + rat_str(v[j - 1]));
        if (!all_) return;
      }
    }
    Rat sum = 0;
    for (const Rat& x : v) sum += x;
    if (sum != q) {
      report(1, Violation::Site::Breakpoint, k,
             "component sum " + rat_str(sum) + " != " + rat_str(q));
    }
  }

  void check_segment(std::size_t k) {
    const std::vector<Rat> slopes = P_.segment_slopes(k);
    Rat slope_sum = 0;
    for (const Rat& s : slopes) slope_sum += s;
    if (slope_sum != 1) {
      report(1, Violation::Site::Segment, k, "slope sum " + rat_str(slope_sum) + " != 1");
      if (!all_) return;
    }
    const std::optional<Band> band = segment_band(P_, k);
    if (!band) {
      report(2, Violation::Site::Segment, k, describe_slopes(slopes));
      return;
    }
    if (!generalized_ && band->width() != 1) {
      report(2, Violation::Site::Segment, k,
             "components " + std::to_string(band->lo) + ".." + std::to_string(band->hi) +
                 " rise together; a plain system lets exactly one component rise");
      if (!all_) return;
    }
    if (generalized_) {
      // Band components must coincide on the whole segment; with equal slopes
      // this reduces to equality at the left breakpoint.
      const auto& v = P_.value_at(k);
      for (int j = band->lo; j < band->hi; ++j) {
        if (v[static_cast<std::size_t>(j - 1)] != v[static_cast<std::size_t>(j)]) {
          report(2, Violation::Site::Segment, k,
                 "rising components split: P_" + std::to_string(j) + " = " +
                     rat_str(v[static_cast<std::size_t>(j - 1)]) + ", P_" + std::to_string(j + 1) +
                     " = " + rat_str(v[static_cast<std::size_t>(j)]));
          if (!all_) return;
        }
      }
    }
  }

  // Junction axiom at interior breakpoint k, between segments k-1 and k.
  void check_junction(std::size_t k) {
    const std::optional<Band> left = segment_band(P_, k - 1);
    const std::optional<Band> right = segment_band(P_, k);
    if (!left || !right) return;  // slope-shape violation already reported
    const auto& v = P_.value_at(k);
    const Rat& q = P_.breakpoint(k);
    if (left->lo < right->hi) {
      for (int j = left->lo; j < right->hi; ++j) {
        if (v[static_cast<std::size_t>(j - 1)] != v[static_cast<std::size_t>(j)]) {
          report(3, Violation::Site::Breakpoint, k,
                 "P_" + std::to_string(left->lo) + ".." + "P_" + std::to_string(right->hi) +
                     " must agree at " + rat_str(q) + "; P_" + std::to_string(j) + " = " +
                     rat_str(v[static_cast<std::size_t>(j - 1)]) + " != P_" +
                     std::to_string(j + 1) + " = " + rat_str(v[static_cast<std::size_t>(j)]));
          return;
        }
      }
    } else if (generalized_ && left->lo > right->hi) {
      // Valid maps separate the finished band strictly above the starting one.
      if (v[static_cast<std::size_t>(left->lo - 1)] <= v[static_cast<std::size_t>(right->hi - 1)]) {
        report(3, Violation::Site::Breakpoint, k,
               "P_" + std::to_string(left->lo) + "(" + rat_str(q) + ") = " +
                   rat_str(v[static_cast<std::size_t>(left->lo - 1)]) +
                   " does not exceed P_" + std::to_string(right->hi) + " = " +
                   rat_str(v[static_cast<std::size_t>(right->hi - 1)]));
      }
    }
  }

  static std::string describe_slopes(const std::vector<Rat>& slopes) {
    std::string out = "slopes (";
    for (std::size_t j = 0; j < slopes.size(); ++j) {
      if (j) out += ", ";
      out += rat_str(slopes[j]);
    }
    out += ") are not a contiguous band rising at 1/width";
    return out;
  }

  const PLMap& P_;
  bool generalized_;
  bool all_;
  std::vector<Violation> found_;
};

}  // namespace

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::S1: return "S1";
    case Axiom::S2: return "S2";
    case Axiom::S3: return "S3";
    case Axiom::G1: return "G1";
    case Axiom::G2: return "G2";
    case Axiom::G3: return "G3";
  }
  return "?";
}

std::optional<Band> segment_band(const PLMap& P, std::size_t k) {
  const std::vector<Rat> slopes = P.segment_slopes(k);
  int lo = 0, hi = 0;
  for (std::size_t j = 0; j < slopes.size(); ++j) {
    if (slopes[j] != 0) {
      if (lo == 0) {
        lo = hi = static_cast<int>(j) + 1;
      } else if (static_cast<int>(j) + 1 == hi + 1) {
        hi = static_cast<int>(j) + 1;
      } else {
        return std::nullopt;  // nonzero slopes not contiguous
      }
    }
  }
  if (lo == 0) return std::nullopt;  // everything flat
  const Band band{lo, hi};
  const Rat expected(1, band.width());
  for (int j = lo; j <= hi; ++j) {
    if (slopes[static_cast<std::size_t>(j - 1)] != expected) return std::nullopt;
  }
  return band;
}

std::vector<Violation> check_nsystem(const PLMap& P, bool all_violations) {
  return Checker(P, /*generalized=*/false, all_violations).run();
}

std::vector<Violation> check_generalized(const PLMap& P, bool all_violations) {
  return Checker(P, /*generalized=*/true, all_violations).run();
}

std::optional<NSystem> NSystem::try_validate(PLMap P, Violation* why) {
  auto violations = check_nsystem(P);
  if (!violations.empty()) {
    if (why) *why = violations.front();
    return std::nullopt;
  }
  return NSystem(std::move(P));
}

NSystem NSystem::require(PLMap P, const char* context) {
  Violation why;
  auto sys = try_validate(std::move(P), &why);
  if (!sys) {
    throw std::logic_error(std::string(context) + ": construction broke axiom " +
                           axiom_name(why.axiom) + " (" + why.detail + ")");
  }
  return *std::move(sys);
}

GenNSystem NSystem::as_generalized() const {
  return GenNSystem::require(map_, "n-system reinterpreted as generalized");
}

std::optional<GenNSystem> GenNSystem::try_validate(PLMap P, Violation* why) {
  auto violations = check_generalized(P);
  if (!violations.empty()) {
    if (why) *why = violations.front();
    return std::nullopt;
  }
  return GenNSystem(std::move(P));
}

GenNSystem GenNSystem::require(PLMap P, const char* context) {
  Violation why;
  auto sys = try_validate(std::move(P), &why);
  if (!sys) {
    throw std::logic_error(std::string(context) + ": construction broke axiom " +
                           axiom_name(why.axiom) + " (" + why.detail + ")");
  }
  return *std::move(sys);
}

NSystem canonical_ramp(int n, const Rat& a, const Rat& b) {
  if (n < 1) throw std::invalid_argument("ramp needs n >= 1");
  if (a < 0 || a >= b) throw std::invalid_argument("ramp needs 0 <= a < b");
  std::vector<Rat> bps;
  std::vector<std::vector<Rat>> vals;
  const Rat lo = a / n, hi = b / n;
  for (int i = 0; i <= n; ++i) {
    bps.push_back(Rat(n - i) * a / n + Rat(i) * b / n);
    std::vector<Rat> v(static_cast<std::size_t>(n), lo);
    // Components rise top-down: after i steps the top i components are done.
    for (int j = n - i + 1; j <= n; ++j) v[static_cast<std::size_t>(j - 1)] = hi;
    vals.push_back(std::move(v));
  }
  return NSystem::require(PLMap(std::move(bps), std::move(vals)), "canonical ramp");
}

namespace {

void require_join_preconditions(const PLMap& f, const PLMap& g) {
  if (f.components() != g.components())
    throw std::invalid_argument("join: component counts differ");
  if (f.domain_hi() != g.domain_lo())
    throw std::invalid_argument("join: domains are not adjacent");
  const Rat shared = f.domain_hi() / f.components();
  for (const auto* m : {&f, &g}) {
    const auto& v = m == &f ? f.value_at(f.breakpoint_count() - 1) : g.value_at(0);
    for (const Rat& x : v) {
      if (x != shared)
        throw std::invalid_argument(
            "join: maps must pass through (b/n, ..., b/n) at the junction, got " + rat_str(x) +
            " instead of " + rat_str(shared));
    }
  }
}

}  // namespace

NSystem join(const NSystem& f, const NSystem& g) {
  require_join_preconditions(f.map(), g.map());
  return NSystem::require(PLMap::concat(f.map(), g.map()), "join");
}

GenNSystem join(const GenNSystem& f, const GenNSystem& g) {
  require_join_preconditions(f.map(), g.map());
  return GenNSystem::require(PLMap::concat(f.map(), g.map()), "join");
}

}  // namespace nsys
