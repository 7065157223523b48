#include "nsys/simplex.hpp"

#include <stdexcept>

namespace nsys {

SimplexPoint::SimplexPoint(std::vector<Rat> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("simplex point needs at least one coordinate");
  Rat sum = 0;
  strict_ = coords_.front() > 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] < 0) throw std::invalid_argument("simplex coordinates must be nonnegative");
    if (i > 0) {
      if (coords_[i] < coords_[i - 1])
        throw std::invalid_argument("simplex coordinates must be nondecreasing");
      if (coords_[i] == coords_[i - 1]) strict_ = false;
    }
    sum += coords_[i];
  }
  if (sum != 1) throw std::invalid_argument("simplex coordinates must sum to 1");
}

bool SimplexPoint::barycenter() const {
  return coords_.front() == coords_.back();
}

Rat SimplexPoint::psi(int j) const {
  if (j < 0 || j > dim()) throw std::out_of_range("psi index");
  Rat sum = 0;
  for (int i = 0; i < j; ++i) sum += coords_[static_cast<std::size_t>(i)];
  return sum;
}

std::vector<Rat> SimplexPoint::psi_profile() const {
  std::vector<Rat> out;
  out.reserve(coords_.size());
  Rat sum = 0;
  for (const Rat& c : coords_) {
    sum += c;
    out.push_back(sum);
  }
  return out;
}

SimplexPoint SimplexPoint::perturb(const Rat& eps) const {
  if (eps <= 0) throw std::invalid_argument("perturbation size must be positive");
  const int m = dim();
  const Rat denom = 1 + eps * frac(m * (m + 1), 2);
  std::vector<Rat> out;
  out.reserve(coords_.size());
  for (int i = 1; i <= m; ++i) {
    out.push_back((coord(i) + eps * i) / denom);
  }
  return SimplexPoint(std::move(out));
}

SimplexPoint SimplexPoint::barycenter_of(int m) {
  if (m < 1) throw std::invalid_argument("simplex dimension must be positive");
  return SimplexPoint(std::vector<Rat>(static_cast<std::size_t>(m), Rat(1, m)));
}

std::vector<RelationViolation> check_simplex_relations(const SimplexPoint& a) {
  std::vector<RelationViolation> out;
  const int m = a.dim();
  const std::vector<Rat> psi = a.psi_profile();
  auto psi_at = [&](int j) { return psi[static_cast<std::size_t>(j - 1)]; };
  if (psi_at(1) < 0) {
    out.push_back({"psi_nonneg", "psi_1 = " + rat_str(psi_at(1))});
  }
  for (int j = 1; j + 2 <= m; ++j) {
    const Rat lhs = psi_at(j) / j;
    const Rat rhs = psi_at(j + 1) / (j + 1);
    if (lhs > rhs) {
      out.push_back({"psi_ratio(" + std::to_string(j) + ")",
                     rat_str(lhs) + " > " + rat_str(rhs)});
    }
    const Rat clhs = (1 - psi_at(j)) / (m - j);
    const Rat crhs = (1 - psi_at(j + 1)) / (m - j - 1);
    if (clhs > crhs) {
      out.push_back({"co_psi_ratio(" + std::to_string(j) + ")",
                     rat_str(clhs) + " > " + rat_str(crhs)});
    }
    if (1 - psi_at(j) < 0) {
      out.push_back({"co_psi_nonneg(" + std::to_string(j) + ")",
                     "1 - psi_" + std::to_string(j) + " = " + rat_str(Rat(1 - psi_at(j)))});
    }
  }
  return out;
}

}  // namespace nsys
