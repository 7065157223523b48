#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace nsys {

using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>>;

// Applies NSYS_PRECISION (bits, default 80) to the BigFloat default
// precision. Idempotent; every public entry point of this module calls it.
void set_precision_from_env();

class TargetVector {
 public:
  // Coordinates as decimal or p/q strings; the vector is normalized to unit
  // euclidean length. Needs dimension >= 2 and a nonzero vector.
  static TargetVector from_strings(const std::vector<std::string>& coords);
  explicit TargetVector(std::vector<BigFloat> coords);

  int dim() const { return static_cast<int>(u_.size()); }
  const std::vector<BigFloat>& u() const { return u_; }

 private:
  std::vector<BigFloat> u_;
};

// max(|x|_2, Q * |x . u|); the unit ball shrinks along u as Q grows.
BigFloat gauge(const TargetVector& u, const BigFloat& Q, const std::vector<long long>& x);

struct MinimaResult {
  std::vector<BigFloat> lambda;                    // lambda_1 <= ... <= lambda_d
  std::vector<std::vector<long long>> witnesses;   // canonical sign, lex tie-break
  BigFloat certified_T;  // enumeration of all gauge <= certified_T was complete
};

// Exact successive minima: enumerate every lattice point of gauge <= T (the
// euclidean bound confines them to a box), sort, select greedily by exact
// integer rank. T doubles until d independent points fit, which certifies
// the result. T_hint seeds the radius, e.g. from a nearby Q.
// When u is rationally degenerate (an axis, say) the slab contains a whole
// lattice hyperplane and the candidate list grows like T^(d-1); generic
// directions keep it near the volume bound ~ T^d / Q.
MinimaResult successive_minima(const TargetVector& u, const BigFloat& Q,
                               const BigFloat* T_hint = nullptr);

struct TrajectoryPoint {
  double q;                                       // log Q
  std::vector<double> L;                          // log lambda_j
  std::vector<std::vector<long long>> witnesses;
};

// Sample q = 0, step, 2*step, ... up to q_max. Consecutive radii warm-start
// each other: lambda_d is nondecreasing in Q and grows at most by e^step.
std::vector<TrajectoryPoint> minima_trajectory(const TargetVector& u, double q_max, double step);

struct ExponentEstimate {
  int dim = 0;
  double q_lo = 0, q_hi = 0;                 // tail window used
  std::vector<double> psi_lower, psi_upper;  // extrema of (L_1+...+L_j)/q on the tail
};

// Reads off exponent estimates from the tail fraction of a trajectory
// (points with q >= (1 - tail_fraction) * q_final; q = 0 is skipped).
ExponentEstimate estimate_exponents(const std::vector<TrajectoryPoint>& trajectory,
                                    double tail_fraction);

void write_minima_csv(std::ostream& out, const std::vector<TrajectoryPoint>& trajectory);

}  // namespace nsys
