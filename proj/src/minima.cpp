#include "nsys/minima.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "nsys/rational.hpp"

namespace nsys {

void set_precision_from_env() {
  static const bool applied = [] {
    long bits = 80;
    if (const char* env = std::getenv("NSYS_PRECISION")) {
      char* end = nullptr;
      const long parsed = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && parsed >= 24 && parsed <= 65536) bits = parsed;
    }
    const unsigned digits = static_cast<unsigned>(bits * 30103L / 100000L) + 1;
    BigFloat::default_precision(digits);
    return true;
  }();
  (void)applied;
}

TargetVector::TargetVector(std::vector<BigFloat> coords) : u_(std::move(coords)) {
  if (u_.size() < 2) throw std::invalid_argument("target vector needs dimension >= 2");
  BigFloat norm2 = 0;
  for (const BigFloat& c : u_) norm2 += c * c;
  if (norm2 == 0) throw std::invalid_argument("target vector must be nonzero");
  const BigFloat norm = sqrt(norm2);
  for (BigFloat& c : u_) c /= norm;
}

TargetVector TargetVector::from_strings(const std::vector<std::string>& coords) {
  set_precision_from_env();
  std::vector<BigFloat> parsed;
  parsed.reserve(coords.size());
  for (const std::string& s : coords) {
    if (s.find('/') != std::string::npos) {
      const Rat r = parse_rat(s);
      parsed.emplace_back(BigFloat(r.get_num().get_str()) / BigFloat(r.get_den().get_str()));
    } else {
      try {
        parsed.emplace_back(BigFloat(s));
      } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse coordinate '" + s + "'");
      }
    }
  }
  return TargetVector(std::move(parsed));
}

BigFloat gauge(const TargetVector& u, const BigFloat& Q, const std::vector<long long>& x) {
  if (x.size() != u.u().size()) throw std::invalid_argument("gauge: dimension mismatch");
  BigFloat norm2 = 0, dot = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const BigFloat xi(x[i]);
    norm2 += xi * xi;
    dot += xi * u.u()[i];
  }
  const BigFloat by_norm = sqrt(norm2);
  const BigFloat by_slab = Q * abs(dot);
  return by_norm > by_slab ? by_norm : by_slab;
}

namespace {

struct Candidate {
  std::vector<long long> x;
  BigFloat g;
};

bool canonical_sign(const std::vector<long long>& x) {
  for (long long v : x) {
    if (v > 0) return true;
    if (v < 0) return false;
  }
  return false;  // zero vector, not a candidate anyway
}

long long ll_floor(double v) { return static_cast<long long>(std::floor(v)); }
long long ll_ceil(double v) { return static_cast<long long>(std::ceil(v)); }

// Complete list of nonzero lattice points with gauge <= T up to sign,
// canonical representatives only, sorted by exact gauge then lex order.
// Doubles steer the scan with relative margins; the exact gauge decides.
class Enumerator {
 public:
  Enumerator(const TargetVector& u, const BigFloat& Q, const BigFloat& T)
      : u_(u), Q_(Q), T_(T), d_(u.dim()) {
    ud_.reserve(static_cast<std::size_t>(d_));
    for (const BigFloat& c : u.u()) ud_.push_back(static_cast<double>(c));
    Qd_ = static_cast<double>(Q);
    Td_ = static_cast<double>(T);
    pivot_ = 0;
    for (int i = 1; i < d_; ++i)
      if (std::fabs(ud_[static_cast<std::size_t>(i)]) >
          std::fabs(ud_[static_cast<std::size_t>(pivot_)]))
        pivot_ = i;
    x_.assign(static_cast<std::size_t>(d_), 0);
    for (int i = 0; i < d_; ++i)
      if (i != pivot_) order_.push_back(i);
  }

  std::vector<Candidate> run() {
    descend(0, 0.0, 0.0);
    std::sort(out_.begin(), out_.end(), [](const Candidate& a, const Candidate& b) {
      if (a.g != b.g) return a.g < b.g;
      return a.x < b.x;
    });
    return std::move(out_);
  }

 private:
  void descend(std::size_t level, double norm2, double dot) {
    if (level == order_.size()) {
      scan_pivot(norm2, dot);
      return;
    }
    const int i = order_[level];
    const double budget = Td_ * Td_ * (1 + 1e-9) - norm2;
    if (budget < 0) return;
    const double r = std::sqrt(budget);
    const long long lo = ll_ceil(-r - 1e-9), hi = ll_floor(r + 1e-9);
    for (long long v = lo; v <= hi; ++v) {
      const double dv = static_cast<double>(v);
      const double n2 = norm2 + dv * dv;
      if (n2 > Td_ * Td_ * (1 + 1e-6)) continue;
      x_[static_cast<std::size_t>(i)] = v;
      descend(level + 1, n2, dot + dv * ud_[static_cast<std::size_t>(i)]);
    }
    x_[static_cast<std::size_t>(i)] = 0;
  }

  void scan_pivot(double norm2, double dot) {
    const double budget = Td_ * Td_ * (1 + 1e-9) - norm2;
    if (budget < 0) return;
    const double r = std::sqrt(budget);
    const double upiv = ud_[static_cast<std::size_t>(pivot_)];
    const double tq = Td_ * (1 + 1e-9) / Qd_;
    double slab_lo = (-tq - dot) / upiv;
    double slab_hi = (tq - dot) / upiv;
    if (slab_lo > slab_hi) std::swap(slab_lo, slab_hi);
    const double lo_d = std::max(-r, slab_lo), hi_d = std::min(r, slab_hi);
    if (lo_d > hi_d + 1) return;
    const long long lo = ll_ceil(lo_d - 1e-6 * (std::fabs(lo_d) + 1));
    const long long hi = ll_floor(hi_d + 1e-6 * (std::fabs(hi_d) + 1));
    for (long long v = lo; v <= hi; ++v) {
      x_[static_cast<std::size_t>(pivot_)] = v;
      if (!canonical_sign(x_)) continue;
      const double dv = static_cast<double>(v);
      const double n2 = norm2 + dv * dv;
      const double ip = dot + dv * upiv;
      const double gd = std::max(std::sqrt(n2), Qd_ * std::fabs(ip));
      if (gd > Td_ * (1 + 1e-6) + 1e-9) continue;
      BigFloat g = gauge(u_, Q_, x_);
      if (g <= T_) out_.push_back({x_, std::move(g)});
    }
    x_[static_cast<std::size_t>(pivot_)] = 0;
  }

  const TargetVector& u_;
  const BigFloat& Q_;
  const BigFloat& T_;
  int d_;
  int pivot_;
  std::vector<double> ud_;
  double Qd_ = 0, Td_ = 0;
  std::vector<int> order_;
  std::vector<long long> x_;
  std::vector<Candidate> out_;
};

// Exact rank test over the rationals.
bool extends_rank(const std::vector<std::vector<long long>>& selected,
                  const std::vector<long long>& candidate) {
  const std::size_t rows = selected.size() + 1;
  const std::size_t cols = candidate.size();
  std::vector<std::vector<mpq_class>> A;
  A.reserve(rows);
  for (const auto& row : selected) {
    std::vector<mpq_class> r(cols);
    for (std::size_t j = 0; j < cols; ++j) r[j] = static_cast<long>(row[j]);
    A.push_back(std::move(r));
  }
  std::vector<mpq_class> r(cols);
  for (std::size_t j = 0; j < cols; ++j) r[j] = static_cast<long>(candidate[j]);
  A.push_back(std::move(r));

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && A[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[rank], A[piv]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (A[i][col] == 0) continue;
      const mpq_class f = A[i][col] / A[rank][col];
      for (std::size_t j = col; j < cols; ++j) A[i][j] -= f * A[rank][j];
    }
    ++rank;
  }
  return rank == rows;
}

}  // namespace

MinimaResult successive_minima(const TargetVector& u, const BigFloat& Q, const BigFloat* T_hint) {
  set_precision_from_env();
  if (Q < 1) throw std::invalid_argument("successive minima need Q >= 1");
  const int d = u.dim();
  BigFloat T = (T_hint && *T_hint >= 1) ? *T_hint : BigFloat(2);
  for (int attempt = 0; attempt < 80; ++attempt) {
    const std::vector<Candidate> candidates = Enumerator(u, Q, T).run();
    std::vector<BigFloat> lambda;
    std::vector<std::vector<long long>> witnesses;
    for (const Candidate& c : candidates) {
      if (!extends_rank(witnesses, c.x)) continue;
      witnesses.push_back(c.x);
      lambda.push_back(c.g);
      if (static_cast<int>(witnesses.size()) == d) break;
    }
    if (static_cast<int>(witnesses.size()) == d)
      return MinimaResult{std::move(lambda), std::move(witnesses), T};
    T *= 2;
  }
  throw std::runtime_error("enumeration radius never captured a full basis");
}

std::vector<TrajectoryPoint> minima_trajectory(const TargetVector& u, double q_max, double step) {
  set_precision_from_env();
  if (step <= 0) throw std::invalid_argument("trajectory step must be positive");
  if (q_max < 0) throw std::invalid_argument("trajectory q_max must be >= 0");
  std::vector<TrajectoryPoint> out;
  BigFloat hint = 0;
  bool have_hint = false;
  const BigFloat growth = exp(BigFloat(step)) * BigFloat("1.001");
  for (int k = 0;; ++k) {
    const double q = k * step;
    if (q > q_max * (1 + 1e-12) + 1e-12) break;
    const BigFloat Q = exp(BigFloat(q));
    const MinimaResult res = successive_minima(u, Q, have_hint ? &hint : nullptr);
    TrajectoryPoint pt;
    pt.q = q;
    pt.L.reserve(res.lambda.size());
    for (const BigFloat& l : res.lambda) pt.L.push_back(static_cast<double>(log(l)));
    pt.witnesses = res.witnesses;
    out.push_back(std::move(pt));
    hint = res.lambda.back() * growth;
    have_hint = true;
  }
  return out;
}

ExponentEstimate estimate_exponents(const std::vector<TrajectoryPoint>& trajectory,
                                    double tail_fraction) {
  if (trajectory.empty()) throw std::invalid_argument("empty trajectory");
  if (!(tail_fraction > 0 && tail_fraction <= 1))
    throw std::invalid_argument("tail fraction must lie in (0, 1]");
  ExponentEstimate est;
  est.dim = static_cast<int>(trajectory.front().L.size());
  est.q_hi = trajectory.back().q;
  est.q_lo = est.q_hi * (1 - tail_fraction);
  bool first = true;
  for (const TrajectoryPoint& pt : trajectory) {
    if (pt.q < est.q_lo || pt.q <= 0) continue;
    double sum = 0;
    for (int j = 0; j < est.dim; ++j) {
      sum += pt.L[static_cast<std::size_t>(j)];
      const double ratio = sum / pt.q;
      if (first) {
        est.psi_lower.push_back(ratio);
        est.psi_upper.push_back(ratio);
      } else {
        est.psi_lower[static_cast<std::size_t>(j)] =
            std::min(est.psi_lower[static_cast<std::size_t>(j)], ratio);
        est.psi_upper[static_cast<std::size_t>(j)] =
            std::max(est.psi_upper[static_cast<std::size_t>(j)], ratio);
      }
    }
    first = false;
  }
  if (first) throw std::invalid_argument("tail window contains no usable points");
  return est;
}

void write_minima_csv(std::ostream& out, const std::vector<TrajectoryPoint>& trajectory) {
  if (trajectory.empty()) throw std::invalid_argument("empty trajectory");
  const std::size_t d = trajectory.front().L.size();
  out << "q";
  for (std::size_t j = 1; j <= d; ++j) out << ",L_" << j;
  for (std::size_t j = 1; j <= d; ++j) out << ",w_" << j;
  out << '\n';
  std::ostringstream line;
  for (const TrajectoryPoint& pt : trajectory) {
    line.str("");
    line << std::fixed << std::setprecision(6) << pt.q << std::defaultfloat
         << std::setprecision(12);
    for (double l : pt.L) line << ',' << l;
    for (const auto& w : pt.witnesses) {
      line << ",\"";
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) line << ' ';
        line << w[i];
      }
      line << '"';
    }
    out << line.str() << '\n';
  }
}

}  // namespace nsys
