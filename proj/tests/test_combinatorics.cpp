#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gcl/independence.hpp"
#include "gcl/shattering.hpp"
#include "helpers.hpp"

using namespace gcl;
using gcl::testing::cube_class;
using gcl::testing::cube_family;
using gcl::testing::fano;

namespace {

// Independent oracle: checks Boolean independence of `subset` by scanning
// every point for every pattern directly on the raw value matrix.
bool independent_by_scan(const FunctionClass& cls, const std::vector<std::size_t>& subset,
                         const Levels& levels) {
  std::size_t k = subset.size();
  for (std::size_t pattern = 0; pattern < (std::size_t{1} << k); ++pattern) {
    bool cell_nonempty = false;
    for (std::size_t x = 0; x < cls.domain_size() && !cell_nonempty; ++x) {
      bool matches = true;
      for (std::size_t j = 0; j < k && matches; ++j) {
        const Rational& v = cls.value(subset[j], x);
        matches = (pattern >> j & 1) ? v < levels.alpha : v > levels.beta;
      }
      cell_nonempty = matches;
    }
    if (!cell_nonempty) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cube coordinate indicators are fully independent") {
  for (std::size_t d : {1u, 3u, 4u}) {
    auto cls = cube_class(d);
    std::vector<std::size_t> all(d);
    for (std::size_t i = 0; i < d; ++i) all[i] = i;
    auto witness = is_boolean_independent(cls, all, Levels(Rational(1, 4), Rational(3, 4)));
    REQUIRE(witness.has_value());
    CHECK(verify(*witness, cls));
    CHECK(witness->cell_points.size() == (std::size_t{1} << d));
  }
}

TEST_CASE("a constant function is never independent") {
  FunctionClass constant({{Rational(1, 2), Rational(1, 2), Rational(1, 2)}});
  CHECK_FALSE(is_boolean_independent(constant, {0}, Levels(Rational(1, 4), Rational(3, 4))));
  CHECK_FALSE(is_boolean_independent(constant, {0}, Levels(Rational(0), Rational(1))));
}

TEST_CASE("Fano line indicators: pairs independent, triples never") {
  auto plane = fano();
  auto cls = plane.line_indicators();
  Levels levels(Rational(1, 4), Rational(3, 4));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j) {
      CHECK(is_boolean_independent(cls, {i, j}, levels).has_value());
      for (std::size_t k = j + 1; k < 7; ++k) {
        CHECK(is_boolean_independent(cls, {i, j, k}, levels).has_value() ==
              independent_by_scan(cls, {i, j, k}, levels));
        CHECK_FALSE(is_boolean_independent(cls, {i, j, k}, levels).has_value());
      }
    }
}

TEST_CASE("max independent subfamily sizes") {
  Levels levels(Rational(1, 4), Rational(3, 4));
  CHECK(max_boolean_independent(cube_class(5), levels, 24).size == 5);
  CHECK(max_boolean_independent(fano().line_indicators(), levels, 24).size == 2);

  FunctionClass constant({{Rational(1, 2), Rational(1, 2)}});
  CHECK(max_boolean_independent(constant, levels, 24).size == 0);
  FunctionClass single({{Rational(0), Rational(1)}});
  CHECK(max_boolean_independent(single, levels, 24).size == 1);

  // Brute-force cross-check on the Fano class.
  auto cls = fano().line_indicators();
  std::size_t best = 0;
  for (std::size_t mask = 1; mask < (1u << 7); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < 7; ++i)
      if (mask >> i & 1) subset.push_back(i);
    if (independent_by_scan(cls, subset, levels)) best = std::max(best, subset.size());
  }
  CHECK(best == 2);
}

TEST_CASE("witness returned by max search verifies") {
  auto result = max_boolean_independent(cube_class(4), Levels(Rational(1, 4), Rational(3, 4)), 24);
  REQUIRE(result.witness.has_value());
  CHECK(verify(*result.witness, cube_class(4)));
}

TEST_CASE("indicator shattering coincides with classical VC shattering") {
  SplitMix64 rng(91);
  for (int trial = 0; trial < 25; ++trial) {
    auto family = gcl::testing::random_family(rng, 5, 10);
    auto cls = FunctionClass::indicators(family);
    for (int pick = 0; pick < 8; ++pick) {
      std::size_t a = rng.below(10), b = rng.below(10);
      if (a == b) continue;
      std::vector<std::size_t> points{a, b};
      std::set<std::size_t> traces;
      for (std::size_t s = 0; s < family.size(); ++s) {
        std::size_t mask = 0;
        // Classical trace; note below-alpha means *outside* the set.
        for (std::size_t j = 0; j < points.size(); ++j)
          if (!family.set(s).test(points[j])) mask |= std::size_t{1} << j;
        traces.insert(mask);
      }
      bool classically = traces.size() == 4;
      CHECK(is_gamma_shattered(cls, Rational(1, 2), points).has_value() == classically);
    }
  }
}

TEST_CASE("constant class shatters nothing") {
  FunctionClass constant({{Rational(1, 2), Rational(1, 2)}});
  CHECK_FALSE(is_gamma_shattered(constant, Rational(1, 4), {0}).has_value());
  CHECK(gamma_dimension(constant, Rational(1, 4), 24).dimension == 0);
}

TEST_CASE("Fano collinear pairs are shattered for gamma below one") {
  auto plane = fano();
  auto cls = plane.line_indicators();
  for (const auto& gamma : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
    auto w = is_gamma_shattered(cls, gamma, {0, 1});
    REQUIRE(w.has_value());
    CHECK(verify(*w, cls));
    CHECK(w->levels.gamma() >= gamma);
  }
  // gamma = 1 is unreachable for 0/1 indicators.
  CHECK_FALSE(is_gamma_shattered(cls, Rational(1), {0, 1}).has_value());
}

TEST_CASE("cube dimension is the log of the coordinate count") {
  // Shattering n points takes 2^n distinct functions, so d coordinate
  // indicators shatter floor(log2 d) points; the trace oracle agrees.
  CHECK(gamma_dimension(cube_class(4), Rational(1, 2), 24).dimension == 2);
  CHECK(vc_dimension_by_traces(cube_family(4), 8) == 2);

  // 2^n functions whose value vectors enumerate every 0/1 column on an
  // n-point domain shatter the whole domain.
  std::size_t n = 3;
  std::vector<std::vector<Rational>> values(8, std::vector<Rational>(n));
  for (std::size_t f = 0; f < 8; ++f)
    for (std::size_t x = 0; x < n; ++x) values[f][x] = Rational((f >> x) & 1);
  FunctionClass columns(std::move(values));
  CHECK(gamma_dimension(columns, Rational(1, 2), 24).dimension == 3);
  auto capped = gamma_dimension(columns, Rational(1, 2), 2);
  CHECK(capped.dimension == 2);
  CHECK(capped.capped);
}

TEST_CASE("vc dimension agrees with the trace-counting oracle") {
  SplitMix64 rng(92);
  for (int trial = 0; trial < 15; ++trial) {
    auto family = gcl::testing::random_family(rng, 4 + rng.below(3), 8 + rng.below(5));
    std::size_t by_traces = vc_dimension_by_traces(family, 8);
    CHECK(vc_dimension(family, 8).dimension == by_traces);
    // Indicator gamma-dimension is constant on (0,1).
    auto cls = FunctionClass::indicators(family);
    for (const auto& gamma : {Rational(1, 4), Rational(3, 4), Rational(9, 10)})
      CHECK(gamma_dimension(cls, gamma, 8).dimension == by_traces);
  }
}

TEST_CASE("gamma dimension is non-increasing in gamma") {
  SplitMix64 rng(93);
  for (int trial = 0; trial < 10; ++trial) {
    auto cls = gcl::testing::random_class(rng, 5, 8);
    std::size_t previous = 100;
    for (const auto& gamma : {Rational(1, 10), Rational(1, 3), Rational(2, 3), Rational(1)}) {
      std::size_t dim = gamma_dimension(cls, gamma, 6).dimension;
      CHECK(dim <= previous);
      previous = dim;
    }
  }
}

TEST_CASE("independence is monotone under taking subfamilies") {
  SplitMix64 rng(94);
  Levels levels(Rational(1, 3), Rational(2, 3));
  for (int trial = 0; trial < 10; ++trial) {
    auto cls = gcl::testing::random_class(rng, 6, 16);
    std::vector<std::size_t> subset{0, 1, 2, 3};
    if (is_boolean_independent(cls, subset, levels)) {
      CHECK(is_boolean_independent(cls, {0, 1}, levels).has_value());
      CHECK(is_boolean_independent(cls, {1, 3}, levels).has_value());
    }
  }
}

TEST_CASE("assouad duality on power-of-two families") {
  for (std::size_t n : {1u, 2u, 3u}) {
    auto cls = cube_class(std::size_t{1} << n);  // 2^n coordinate indicators
    std::vector<std::size_t> all(cls.n_functions());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    Levels levels(Rational(1, 4), Rational(3, 4));
    auto witness = is_boolean_independent(cls, all, levels);
    REQUIRE(witness.has_value());
    auto shatter = assouad_shatter(cls, *witness);
    CHECK(shatter.points.size() == n);
    CHECK(verify(shatter, cls));
    auto confirmed = is_gamma_shattered(cls, levels.gamma(), shatter.points);
    CHECK(confirmed.has_value());
  }
}

TEST_CASE("assouad rejects non-power-of-two witnesses") {
  auto cls = cube_class(3);
  auto witness = is_boolean_independent(cls, {0, 1, 2}, Levels(Rational(1, 4), Rational(3, 4)));
  REQUIRE(witness.has_value());
  CHECK_THROWS_AS(assouad_shatter(cls, *witness), std::invalid_argument);
}

TEST_CASE("growth procedure reaches full depth on the cube") {
  auto cls = cube_class(3);
  Measure mu = Measure::uniform(8);
  auto result = grow_boolean_independent(cls, mu, PointSet::full(8),
                                         Levels(Rational(1, 4), Rational(3, 4)), 3);
  CHECK(result.reached == 3);
  REQUIRE(result.witness.has_value());
  CHECK(verify(*result.witness, cls));
  CHECK(is_boolean_independent(cls, result.witness->function_indices,
                               result.witness->levels)
            .has_value());
}

TEST_CASE("growth stops at depth two on the Fano class") {
  auto cls = fano().line_indicators();
  Measure mu = Measure::uniform(7);
  auto result = grow_boolean_independent(cls, mu, PointSet::full(7),
                                         Levels(Rational(1, 4), Rational(3, 4)), 5);
  CHECK(result.reached == 2);
  CHECK_FALSE(result.witness.has_value());
}

TEST_CASE("growth stops immediately on a constant class") {
  FunctionClass constant({{Rational(1, 2), Rational(1, 2)}});
  Measure mu = Measure::uniform(2);
  auto result = grow_boolean_independent(constant, mu, PointSet::full(2),
                                         Levels(Rational(1, 4), Rational(3, 4)), 3);
  CHECK(result.reached == 0);
  CHECK_THROWS_AS(grow_boolean_independent(constant, mu, PointSet(2),
                                           Levels(Rational(1, 4), Rational(3, 4)), 1),
                  std::invalid_argument);
}
