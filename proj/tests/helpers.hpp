#pragma once

#include <vector>

#include "gcl/function_class.hpp"
#include "gcl/measure.hpp"
#include "gcl/partition.hpp"
#include "gcl/plane.hpp"
#include "gcl/rng.hpp"

namespace gcl::testing {

/// d coordinate indicators on the cube {0,1}^d (2^d points; point x has
/// coordinate j equal to bit j of x).
inline FunctionClass cube_class(std::size_t d) {
  std::size_t points = std::size_t{1} << d;
  std::vector<std::vector<Rational>> values(d, std::vector<Rational>(points, Rational(0)));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t x = 0; x < points; ++x)
      if (x >> j & 1) values[j][x] = 1;
  return FunctionClass(std::move(values));
}

inline SetFamily cube_family(std::size_t d) {
  std::size_t points = std::size_t{1} << d;
  std::vector<PointSet> sets(d, PointSet(points));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t x = 0; x < points; ++x)
      if (x >> j & 1) sets[j].set(x);
  return SetFamily(points, std::move(sets));
}

inline ProjectivePlane fano() { return build_plane(2); }

inline SetFamily random_family(SplitMix64& rng, std::size_t n_sets, std::size_t n_points) {
  std::vector<PointSet> sets;
  for (std::size_t s = 0; s < n_sets; ++s) {
    PointSet set(n_points);
    for (std::size_t p = 0; p < n_points; ++p)
      if (rng.next() & 1) set.set(p);
    sets.push_back(std::move(set));
  }
  return SetFamily(n_points, std::move(sets));
}

/// Random measure with positive rational weights (denominator-controlled).
inline Measure random_measure(SplitMix64& rng, std::size_t n_points) {
  std::vector<Rational> raw(n_points);
  Rational total(0);
  for (std::size_t p = 0; p < n_points; ++p) {
    raw[p] = Rational(static_cast<long>(1 + rng.below(97)));
    total += raw[p];
  }
  for (auto& w : raw) w /= total;
  return Measure::exact(std::move(raw));
}

inline Partition random_partition(SplitMix64& rng, std::size_t n_points, int max_blocks) {
  std::vector<int> labels(n_points);
  for (std::size_t p = 0; p < n_points; ++p)
    labels[p] = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_blocks)));
  return Partition(std::move(labels));
}

inline FunctionClass random_class(SplitMix64& rng, std::size_t n_functions, std::size_t n_points,
                                  long value_denominator = 12) {
  std::vector<std::vector<Rational>> values(n_functions, std::vector<Rational>(n_points));
  for (auto& row : values)
    for (auto& v : row)
      v = Rational(static_cast<long>(rng.below(static_cast<std::uint64_t>(value_denominator + 1))),
                   value_denominator);
  return FunctionClass(std::move(values));
}

}  // namespace gcl::testing
