#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gcl/function_class.hpp"
#include "gcl/partition.hpp"
#include "gcl/rational.hpp"

namespace gcl {

/// Incidence structure of the projective plane of prime order q built from
/// the one- and two-dimensional subspaces of F_q^3. Points are normalized
/// representatives (first nonzero coordinate 1), ordered lexicographically;
/// lines are the null spaces of normalized linear functionals, identified
/// with their point sets by inclusion.
struct ProjectivePlane {
  long q = 0;
  std::size_t m = 0;  // q^2 + q + 1
  std::vector<std::array<long, 3>> points;
  std::vector<std::array<long, 3>> line_functionals;
  SetFamily lines{1, {PointSet(1)}};

  FunctionClass line_indicators() const { return FunctionClass::indicators(lines); }
};

struct PlaneAxiomReport {
  bool counts_match = false;        // card points = card lines = q^2+q+1
  bool line_size = false;           // every line has q+1 points
  bool point_degree = false;        // every point on q+1 lines
  bool unique_line_per_pair = false;

  bool all() const { return counts_match && line_size && point_degree && unique_line_per_pair; }
};

/// Builds the plane of prime order q; throws on q < 2 or composite q.
/// All four axioms are verified during construction.
ProjectivePlane build_plane(long q);

PlaneAxiomReport verify_plane(const ProjectivePlane& plane);

/// Counting boundary of a line under a partition of the plane's points:
/// the union of blocks meeting the line without being contained in it.
/// Returns max over lines of card(boundary)/m as an exact rational.
Rational max_line_boundary(const ProjectivePlane& plane, const Partition& pi);

enum class SearchMethod { kExhaustive, kLocalSearch };

struct BoundaryMinimum {
  Partition partition;
  Rational value;
  SearchMethod method = SearchMethod::kExhaustive;
};

/// Minimizes max_line_boundary over partitions into exactly k nonempty
/// blocks. Exhaustive when the k^m state space is at most 10^7; otherwise
/// seeded multi-start local search (single-point moves, first improvement)
/// within the evaluation budget. Restarts run in parallel with per-restart
/// seeds and a deterministic best-value reduction.
BoundaryMinimum minimize_boundary(const ProjectivePlane& plane, int k, std::uint64_t budget,
                                  std::uint64_t seed, int restarts = 20, int threads = 1);

struct AlonCheck {
  bool hypothesis_holds = false;  // k^4 <= m (1-eps)^2
  bool vacuous = false;
  bool falsified = false;         // found a partition with boundary <= eps
  Rational achieved;
  SearchMethod method = SearchMethod::kExhaustive;
};

/// Checks the partition-boundary lower bound: when k^2 <= sqrt(m)(1-eps),
/// every k-block partition must leave some line with boundary fraction
/// > eps. Exhaustive search proves it for the given k; local search only
/// certifies non-falsification.
AlonCheck alon_bound_check(const ProjectivePlane& plane, const Rational& eps, int k,
                           std::uint64_t budget, std::uint64_t seed, int restarts = 20,
                           int threads = 1);

}  // namespace gcl
