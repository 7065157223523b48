#include <doctest.h>

#include <stdexcept>

#include "nsys/blocks.hpp"
#include "oracles.hpp"

using namespace nsys;

namespace {

SimplexPoint sample_point() {
  return SimplexPoint({frac(1, 6), frac(1, 3), frac(1, 2)});
}

}  // namespace

TEST_CASE("the basic block walks the documented breakpoints and values") {
  const PLMap B = basic_block(sample_point()).map();
  CHECK(B.breakpoints() ==
        std::vector<Rat>{frac(1, 2), frac(5, 6), Rat(1), frac(7, 6), frac(3, 2)});
  CHECK(B.value_at(0) == std::vector<Rat>{frac(1, 6), frac(1, 6), frac(1, 6)});
  CHECK(B.value_at(1) == std::vector<Rat>{frac(1, 6), frac(1, 3), frac(1, 3)});
  CHECK(B.value_at(2) == std::vector<Rat>{frac(1, 6), frac(1, 3), frac(1, 2)});
  CHECK(B.value_at(3) == std::vector<Rat>{frac(1, 3), frac(1, 3), frac(1, 2)});
  CHECK(B.value_at(4) == std::vector<Rat>{frac(1, 2), frac(1, 2), frac(1, 2)});

  // The center breakpoint carries the point itself, scaled to q = 1.
  CHECK(B.eval(Rat(1)) == sample_point().coords());
  CHECK(B.eval(frac(7, 6)) == std::vector<Rat>{frac(1, 3), frac(1, 3), frac(1, 2)});
  CHECK(B.segment_slopes(0) == std::vector<Rat>{Rat(0), frac(1, 2), frac(1, 2)});
  CHECK(B.segment_slopes(1) == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
  CHECK(B.segment_slopes(2) == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
  CHECK(B.segment_slopes(3) == std::vector<Rat>{frac(1, 2), frac(1, 2), Rat(0)});
}

TEST_CASE("blocks require strict points with at least two coordinates") {
  CHECK_THROWS_AS(basic_block(SimplexPoint({Rat(1)})), std::invalid_argument);
  CHECK_THROWS_AS(basic_block(SimplexPoint({frac(1, 4), frac(1, 4), frac(1, 2)})),
                  std::invalid_argument);
  CHECK_THROWS_AS(basic_block(SimplexPoint({Rat(0), frac(1, 3), frac(2, 3)})),
                  std::invalid_argument);
}

TEST_CASE("random blocks satisfy the generalized axioms and frame their point") {
  oracle::Rng rng(31);
  for (int round = 0; round < 25; ++round) {
    const SimplexPoint a = rng.strict_point(static_cast<int>(rng.integer(2, 6)));
    const int n = a.dim();
    const PLMap B = basic_block(a).map();
    CHECK(oracle::violated_axioms(B, true).empty());
    CHECK(B.domain_lo() == Rat(n) * a.coord(1));
    CHECK(B.domain_hi() == Rat(n) * a.coord(n));
    CHECK(B.eval(Rat(1)) == a.coords());
    CHECK(B.breakpoint_count() == static_cast<std::size_t>(2 * n - 1));
  }
}

TEST_CASE("rescaling multiplies domain and values by the same factor") {
  const GenNSystem B = basic_block(sample_point());
  const GenNSystem R = rescale(B, Rat(1));
  CHECK(R.map().domain_lo() == 1);
  CHECK(R.map().domain_hi() == 3);
  CHECK(R.map().eval(Rat(2)) == std::vector<Rat>{frac(1, 3), frac(2, 3), Rat(1)});
  CHECK(R.map().eval(Rat(1)) == std::vector<Rat>{frac(1, 3), frac(1, 3), frac(1, 3)});

  // Rescaling is exact and composes back to the identity.
  CHECK(rescale(R.map(), frac(1, 2)) == B.map());
  CHECK_THROWS_AS(rescale(B, Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(rescale(B, Rat(-2)), std::invalid_argument);
}

TEST_CASE("perturbation magnitudes follow their schedules") {
  const Perturbation none = Perturbation::none();
  CHECK_FALSE(none.active());
  CHECK(none.eps(3) == 0);

  const Perturbation h = Perturbation::harmonic(frac(1, 8));
  CHECK(h.eps(1) == frac(1, 8));
  CHECK(h.eps(4) == frac(1, 32));
  CHECK_THROWS_AS(h.eps(0), std::invalid_argument);

  const Perturbation g = Perturbation::geometric(frac(1, 8), frac(1, 2));
  CHECK(g.eps(1) == frac(1, 8));
  CHECK(g.eps(3) == frac(1, 32));

  CHECK_THROWS_AS(Perturbation::harmonic(Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(Perturbation::geometric(frac(1, 8), Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(Perturbation::geometric(frac(1, 8), Rat(0)), std::invalid_argument);
}

TEST_CASE("schedules gate non-strict entries on a perturbation") {
  const SimplexPoint flat({frac(1, 4), frac(1, 4), frac(1, 2)});
  CHECK_THROWS_AS(BlockSchedule(3, {flat}), std::invalid_argument);
  CHECK_THROWS_AS(BlockSchedule(2, {sample_point()}), std::invalid_argument);
  CHECK_THROWS_AS(BlockSchedule(3, {}), std::invalid_argument);

  const BlockSchedule ok(3, {flat}, Perturbation::harmonic(frac(1, 512)));
  CHECK(ok.entry(1) == flat);
  CHECK(ok.entry(4) == flat);
  CHECK(ok.effective_entry(2) == flat.perturb(frac(1, 1024)));
  CHECK(ok.effective_entry(2).strict());

  // Barycenter entries are never perturbed.
  const BlockSchedule bary(3, {SimplexPoint::barycenter_of(3), sample_point()},
                           Perturbation::harmonic(frac(1, 512)));
  CHECK(bary.effective_entry(1) == SimplexPoint::barycenter_of(3));
  CHECK(bary.effective_entry(2) == sample_point().perturb(frac(1, 1024)));
  CHECK(bary.effective_entry(3) == SimplexPoint::barycenter_of(3));
}

TEST_CASE("realization chains rescaled blocks from 1 to Q") {
  const BlockSchedule schedule(3, {sample_point()});
  const RealizedPrefix real = realize(schedule, Rat(9));
  const PLMap& P = real.system.map();
  CHECK(P.domain_lo() == 1);
  CHECK(P.domain_hi() == 9);
  CHECK(real.boundaries.front() == 1);
  CHECK(real.boundaries.back() == 9);
  CHECK(real.used.size() + 1 == real.boundaries.size());
  CHECK(oracle::violated_axioms(P, true).empty());

  // Block i of this cycle stretches its domain by a_n / a_1 = 3.
  CHECK(real.boundaries == std::vector<Rat>{Rat(1), Rat(3), Rat(9)});
  CHECK(P.eval(Rat(1)) == std::vector<Rat>{frac(1, 3), frac(1, 3), frac(1, 3)});
  CHECK(P.eval(Rat(2)) == std::vector<Rat>{frac(1, 3), frac(2, 3), Rat(1)});
  CHECK(P.eval(Rat(6)) == std::vector<Rat>{Rat(1), Rat(2), Rat(3)});
}

TEST_CASE("realization cuts mid-block and keeps the axioms") {
  const BlockSchedule schedule(3, {sample_point()});
  const RealizedPrefix real = realize(schedule, Rat(5));
  CHECK(real.system.map().domain_hi() == 5);
  CHECK(real.boundaries.back() == 5);
  CHECK(oracle::violated_axioms(real.system.map(), true).empty());
  CHECK_THROWS_AS(realize(schedule, Rat(1)), std::invalid_argument);
}

TEST_CASE("barycenter entries realize as straight pieces") {
  const BlockSchedule schedule(2, {SimplexPoint::barycenter_of(2)});
  const RealizedPrefix real = realize(schedule, Rat(8));
  const PLMap& P = real.system.map();
  CHECK(P.breakpoints() == std::vector<Rat>{Rat(1), Rat(8)});
  CHECK(P.eval(Rat(5)) == std::vector<Rat>{frac(5, 2), frac(5, 2)});
  CHECK(real.boundaries == std::vector<Rat>{Rat(1), Rat(2), Rat(4), Rat(8)});
  CHECK(check_generalized(P).empty());
}

TEST_CASE("perturbed schedules still realize valid systems") {
  oracle::Rng rng(57);
  for (int round = 0; round < 10; ++round) {
    const int n = static_cast<int>(rng.integer(2, 5));
    const BlockSchedule schedule(
        n, {SimplexPoint::barycenter_of(n), rng.strict_point(n)},
        Perturbation::geometric(frac(1, 16), frac(1, 2)));
    const RealizedPrefix real = realize(schedule, Rat(20));
    CHECK(oracle::violated_axioms(real.system.map(), true).empty());
    CHECK(real.system.map().domain_hi() == 20);
  }
}
