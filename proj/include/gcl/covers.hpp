#pragma once

#include <optional>
#include <vector>

#include "gcl/function_class.hpp"
#include "gcl/measure.hpp"
#include "gcl/partition.hpp"

namespace gcl {

/// Pointwise-ordered pair of value vectors over the domain.
struct Bracket {
  std::vector<Rational> lower;
  std::vector<Rational> upper;

  Rational width(const Measure& mu) const;
  /// Pointwise membership test.
  bool contains(std::span<const Rational> f) const;
  /// Membership at positive-mass points only.
  bool contains_ae(std::span<const Rational> f, const Measure& mu) const;
};

/// Canonical bracket of a group of functions: pointwise envelope. Any
/// bracket covering the group tightens to this one without growing width.
Bracket envelope_bracket(const FunctionClass& cls, const std::vector<std::size_t>& group);

enum class Certificate { kExact, kUpperBound, kLowerBound };

struct CoverResult {
  std::size_t count = 0;
  Certificate certified = Certificate::kExact;
  Rational epsilon;
  /// Cover as groups of function indices (one group per ball/bracket).
  std::vector<std::vector<std::size_t>> groups;
  /// Bracket witnesses (bracketing only).
  std::vector<Bracket> brackets;
  /// Ball centers: class member index, or kMidpointCenter for an envelope
  /// midpoint whose values are in center_values[i] (covering only).
  std::vector<std::size_t> centers;
  std::vector<std::vector<Rational>> center_values;
  /// assignment[f] = witness index covering function f.
  std::vector<std::size_t> assignment;

  static constexpr std::size_t kMidpointCenter = static_cast<std::size_t>(-1);
};

enum class SolveMode { kExact, kGreedy };

/// L1(mu) distance between two class members.
Rational l1_distance(const FunctionClass& cls, std::size_t i, std::size_t j, const Measure& mu);

/// Full pairwise distance matrix; the inner loops are the parallel kernel,
/// threads <= 1 runs the serial reference.
std::vector<std::vector<Rational>> l1_distance_matrix(const FunctionClass& cls, const Measure& mu,
                                                      int threads = 1);

/// Smallest number of closed eps-balls covering the class. Centers are class
/// members plus envelope midpoints of groups of envelope width <= 2*eps; the
/// midpoint centers make a cover by 2eps-brackets yield an eps-ball cover.
/// Exact mode solves the minimum set cover (cap 16 functions); greedy mode
/// covers with member-centered balls, flagged as an upper bound.
CoverResult covering_number(const FunctionClass& cls, const Rational& eps, const Measure& mu,
                            SolveMode mode);

/// Greedy maximal eps-separated subset (pairwise distance >= eps, non-strict).
/// The count lower-bounds any covering at radius < eps/2.
CoverResult packing_number(const FunctionClass& cls, const Rational& eps, const Measure& mu);

/// Smallest number of eps-brackets covering the class, via canonical
/// envelope brackets: minimum set cover by width-feasible groups
/// (feasibility is downward closed). Exact cap 20 functions; greedy grows
/// largest-feasible-first and is flagged as an upper bound.
CoverResult bracketing_number(const FunctionClass& cls, const Rational& eps, const Measure& mu,
                              SolveMode mode);

/// Independent brute-force minimum-cover oracles (bitmask dynamic programs
/// over all subsets); intended for cross-checking the exact solvers on
/// small instances.
std::size_t bracketing_number_bruteforce(const FunctionClass& cls, const Rational& eps,
                                         const Measure& mu);
std::size_t covering_number_bruteforce(const FunctionClass& cls, const Rational& eps,
                                       const Measure& mu);

}  // namespace gcl
