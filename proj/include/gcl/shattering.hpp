#pragma once

#include <optional>
#include <vector>

#include "gcl/function_class.hpp"
#include "gcl/witness.hpp"

namespace gcl {

/// Searches for levels alpha < beta with beta - alpha >= gamma under which
/// the class realizes all 2^n below/above patterns on the given points.
///
/// Candidate levels: since all constraints are strict inequalities against
/// finitely many values, only the positions of alpha and beta relative to
/// the sorted distinct values matter. The search enumerates cut pairs (with
/// sentinels kappa_minus - 1 and kappa_plus + 1 at the ends) and realizes
/// each feasible pair by exact rational levels.
std::optional<ShatterWitness> is_gamma_shattered(const FunctionClass& cls, const Rational& gamma,
                                                 const std::vector<std::size_t>& points);

struct DimensionResult {
  std::size_t dimension = 0;
  bool capped = false;  // search stopped at the cap; true value may be larger
};

/// Maximal cardinality of a gamma-shattered point set, up to cap. Shattered
/// sets are downward closed, so depth-first extension of shattered sets is
/// exhaustive.
DimensionResult gamma_dimension(const FunctionClass& cls, const Rational& gamma, std::size_t cap);

/// Vapnik-Chervonenkis dimension of a set family: gamma-dimension of the
/// indicator class at gamma = 1/2.
DimensionResult vc_dimension(const SetFamily& family, std::size_t cap);

/// Classical VC shattering oracle by direct trace counting: a point set is
/// shattered iff the family induces all 2^n traces on it. Independent of the
/// level-search machinery; used as a cross-check for indicator classes.
std::size_t vc_dimension_by_traces(const SetFamily& family, std::size_t cap);

/// Duality construction: from a Boolean independence witness over 2^n
/// functions, extracts n points that the subfamily gamma-shatters with
/// gamma = beta - alpha. Point x_j is the witness cell point of the pattern
/// that puts exactly the functions indexed by subsets containing j below
/// alpha.
ShatterWitness assouad_shatter(const FunctionClass& cls, const IndependenceWitness& witness);

}  // namespace gcl
