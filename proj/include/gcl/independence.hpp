#pragma once

#include <optional>
#include <vector>

#include "gcl/function_class.hpp"
#include "gcl/levels.hpp"
#include "gcl/measure.hpp"
#include "gcl/witness.hpp"

namespace gcl {

/// Hard cap on pattern widths: 2^k cell tables are the honest complexity,
/// operations refuse beyond it rather than approximate.
inline constexpr std::size_t kMaxPatternWidth = 24;

/// Tests whether the chosen subfamily is Boolean independent at the given
/// levels: every one of the 2^k strict-inequality cells must contain a
/// domain point. Witness cell points are the lowest-index points.
std::optional<IndependenceWitness> is_boolean_independent(const FunctionClass& cls,
                                                          const std::vector<std::size_t>& subset,
                                                          const Levels& levels);

struct MaxIndependentResult {
  std::size_t size = 0;
  std::optional<IndependenceWitness> witness;
};

/// Largest k <= cap admitting a Boolean independent subfamily at the given
/// levels. Depth-first search over extensions of independent prefixes
/// (supersets of dependent families are dependent); ties broken by lowest
/// function index, so the witness is the lexicographically first maximum.
MaxIndependentResult max_boolean_independent(const FunctionClass& cls, const Levels& levels,
                                             std::size_t cap);

struct GrowResult {
  /// Present iff the requested depth was reached.
  std::optional<IndependenceWitness> witness;
  /// Number of functions successfully added before the search stopped.
  std::size_t reached = 0;
};

/// Iterative growth of an independent sequence inside a base set of positive
/// mass: step k+1 searches the class (lowest index first) for a function
/// splitting every current cell into two positive-mass parts. Every cell of
/// the returned witness additionally satisfies mu(cell & base) > 0.
GrowResult grow_boolean_independent(const FunctionClass& cls, const Measure& mu,
                                    const PointSet& base, const Levels& levels, std::size_t depth);

}  // namespace gcl
