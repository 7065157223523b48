#include <doctest.h>

#include <stdexcept>

#include "nsys/simplex.hpp"
#include "oracles.hpp"

using namespace nsys;

TEST_CASE("simplex points require ordered nonnegative coordinates summing to 1") {
  const SimplexPoint a({frac(1, 6), frac(1, 3), frac(1, 2)});
  CHECK(a.dim() == 3);
  CHECK(a.coord(1) == frac(1, 6));
  CHECK(a.coord(3) == frac(1, 2));
  CHECK(a.strict());
  CHECK_FALSE(a.barycenter());

  CHECK_THROWS_AS(SimplexPoint({frac(1, 2), frac(1, 2), frac(1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(SimplexPoint({frac(1, 2), frac(1, 4), frac(1, 4)}), std::invalid_argument);
  CHECK_THROWS_AS(SimplexPoint({frac(-1, 4), frac(1, 4), Rat(1)}), std::invalid_argument);
  CHECK_THROWS_AS(SimplexPoint({}), std::invalid_argument);
}

TEST_CASE("strictness needs positive and strictly increasing coordinates") {
  CHECK_FALSE(SimplexPoint({Rat(0), frac(1, 2), frac(1, 2)}).strict());
  CHECK_FALSE(SimplexPoint({frac(1, 4), frac(1, 4), frac(1, 2)}).strict());
  CHECK(SimplexPoint({frac(1, 4), frac(3, 8), frac(3, 8)}).dim() == 3);

  const SimplexPoint b = SimplexPoint::barycenter_of(4);
  CHECK(b.barycenter());
  CHECK_FALSE(b.strict());
  CHECK(b.coord(4) == frac(1, 4));
}

TEST_CASE("psi values are the coordinate prefix sums") {
  const SimplexPoint a({frac(1, 6), frac(1, 3), frac(1, 2)});
  CHECK(a.psi(0) == 0);
  CHECK(a.psi(1) == frac(1, 6));
  CHECK(a.psi(2) == frac(1, 2));
  CHECK(a.psi(3) == 1);
  CHECK(a.psi_profile() == std::vector<Rat>{frac(1, 6), frac(1, 2), Rat(1)});
  CHECK_THROWS_AS(a.psi(4), std::out_of_range);
}

TEST_CASE("perturbation lands strictly inside and keeps the sum") {
  const SimplexPoint a({frac(1, 4), frac(1, 4), frac(1, 2)});
  const SimplexPoint p = a.perturb(frac(1, 10));
  CHECK(p.coords() == std::vector<Rat>{frac(7, 32), frac(9, 32), frac(1, 2)});
  CHECK(p.strict());

  // Tie-broken coordinates separate for every positive magnitude.
  const SimplexPoint q = SimplexPoint({Rat(0), Rat(0), Rat(1)}).perturb(frac(1, 1000));
  CHECK(q.strict());
  Rat sum = 0;
  for (const Rat& c : q.coords()) sum += c;
  CHECK(sum == 1);
}

TEST_CASE("second differences of psi reproduce coordinate gaps") {
  oracle::Rng rng(7);
  for (int round = 0; round < 30; ++round) {
    const SimplexPoint a = rng.strict_point(static_cast<int>(rng.integer(2, 6)));
    for (int j = 1; j < a.dim(); ++j) {
      CHECK(a.psi(j - 1) + a.psi(j + 1) - 2 * a.psi(j) == a.coord(j + 1) - a.coord(j));
    }
  }
}

TEST_CASE("ordered points satisfy both psi chains") {
  oracle::Rng rng(11);
  for (int round = 0; round < 30; ++round) {
    const SimplexPoint a = rng.strict_point(static_cast<int>(rng.integer(2, 6)));
    CHECK(check_simplex_relations(a).empty());
  }
  CHECK(check_simplex_relations(SimplexPoint::barycenter_of(3)).empty());
  CHECK(check_simplex_relations(SimplexPoint({Rat(0), Rat(0), Rat(1)})).empty());
}
