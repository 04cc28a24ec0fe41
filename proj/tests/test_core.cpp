#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcl/domain.hpp"
#include "gcl/levels.hpp"
#include "gcl/measure.hpp"
#include "gcl/partition.hpp"
#include "gcl/rational.hpp"
#include "helpers.hpp"

using namespace gcl;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/7") == Rational(3, 7));
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational("5") == Rational(5));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("0.01") == Rational(1, 100));
  CHECK(rational_string(Rational(3, 7)) == "3/7");
  CHECK(rational_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("power of three detection") {
  long t = 0;
  CHECK(is_power_of_three(Rational(729), t));
  CHECK(t == 6);
  CHECK(is_power_of_three(Rational(1, 3), t));
  CHECK(t == -1);
  CHECK(is_power_of_three(Rational(1), t));
  CHECK(t == 0);
  CHECK_FALSE(is_power_of_three(Rational(6), t));
  CHECK_FALSE(is_power_of_three(Rational(2, 3), t));
}

TEST_CASE("domain invariants") {
  CHECK_THROWS_AS(FiniteDomain(0), std::invalid_argument);
  CHECK_THROWS_AS(FiniteDomain(2, std::vector<std::string>{"a"}), std::invalid_argument);
  FiniteDomain d(3, std::vector<std::string>{"a", "b", "c"});
  CHECK(d.size == 3);
}

TEST_CASE("measure invariants") {
  CHECK_THROWS_AS(Measure::exact({Rational(1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(Measure::exact({Rational(-1), Rational(2)}), std::invalid_argument);
  Measure uniform = Measure::uniform(7);
  CHECK(uniform.weight(0) == Rational(1, 7));
  Measure with_residual = Measure::exact({Rational(1, 2), Rational(1, 4)}, Rational(1, 4));
  CHECK(with_residual.residual() == Rational(1, 4));
  Measure approx = Measure::approximate({0.5, 0.5});
  CHECK(approx.weight(0) == Rational(1, 2));  // dyadic doubles convert exactly

  PointSet s = PointSet::of(7, {0, 1, 2});
  CHECK(uniform.mass(s) == Rational(3, 7));
}

TEST_CASE("function class bounds are tight") {
  FunctionClass cls({{Rational(1, 2), Rational(1, 3)}, {Rational(2), Rational(0)}});
  CHECK(cls.kappa_minus() == Rational(0));
  CHECK(cls.kappa_plus() == Rational(2));
  CHECK(cls.n_functions() == 2);
}

TEST_CASE("levels require a positive gap") {
  CHECK_THROWS_AS(Levels(Rational(1), Rational(1)), std::invalid_argument);
  Levels l(Rational(1, 4), Rational(3, 4));
  CHECK(l.gamma() == Rational(1, 2));
}

TEST_CASE("refine identity and forced example") {
  Partition pi({0, 0, 1});
  CHECK(refine(pi, Partition::trivial(3)) == pi);
  Partition p1({0, 0, 1});
  Partition p2({0, 1, 1});
  CHECK(refine(p1, p2) == Partition::singletons(3));
}

TEST_CASE("refine block count equals nonempty pairwise intersections") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    auto p1 = gcl::testing::random_partition(rng, 20, 4);
    auto p2 = gcl::testing::random_partition(rng, 20, 5);
    auto common = refine(p1, p2);
    int nonempty = 0;
    for (const auto& b1 : p1.blocks())
      for (const auto& b2 : p2.blocks())
        if ((b1 & b2).any()) ++nonempty;
    CHECK(common.block_count() == nonempty);
    CHECK(common.block_count() <= p1.block_count() * p2.block_count());
  }
}

TEST_CASE("refine is commutative, associative, idempotent") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    auto p1 = gcl::testing::random_partition(rng, 15, 3);
    auto p2 = gcl::testing::random_partition(rng, 15, 4);
    auto p3 = gcl::testing::random_partition(rng, 15, 2);
    CHECK(refine(p1, p2) == refine(p2, p1));
    CHECK(refine(refine(p1, p2), p3) == refine(p1, refine(p2, p3)));
    CHECK(refine(p1, p1) == p1);
  }
}

TEST_CASE("partition generated by one set") {
  SetFamily family(4, {PointSet::of(4, {0, 1})});
  Partition pi = partition_generated_by(family);
  CHECK(pi.block_count() == 2);
  CHECK(pi.block_of(0) == pi.block_of(1));
  CHECK(pi.block_of(2) == pi.block_of(3));
  CHECK(pi.block_of(0) != pi.block_of(2));
}

TEST_CASE("partition generated by a partition is that partition") {
  SetFamily family(5, {PointSet::of(5, {0, 1}), PointSet::of(5, {2}), PointSet::of(5, {3, 4})});
  Partition pi = partition_generated_by(family);
  CHECK(pi == Partition({0, 0, 1, 2, 2}));
}

TEST_CASE("generated partition makes every set a union of blocks") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    auto family = gcl::testing::random_family(rng, 4, 12);
    Partition pi = partition_generated_by(family);
    CHECK(pi.block_count() <= 1 << 4);
    for (std::size_t s = 0; s < family.size(); ++s)
      for (const auto& block : pi.blocks()) {
        bool meets = block.intersects(family.set(s));
        bool inside = block.is_subset_of(family.set(s));
        CHECK((!meets || inside));
      }
  }
}
