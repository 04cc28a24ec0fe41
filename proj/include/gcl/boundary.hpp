#pragma once

#include <vector>

#include "gcl/covers.hpp"
#include "gcl/function_class.hpp"
#include "gcl/measure.hpp"
#include "gcl/partition.hpp"

namespace gcl {

/// mu-essential pi-boundary of (a, b): union of blocks carrying positive
/// mass of both sets.
PointSet essential_boundary(const Partition& pi, const PointSet& a, const PointSet& b,
                            const Measure& mu);

/// Output of the partition-based bracket construction. The class is rescaled
/// to [0,1] internally (f_scaled = (f - offset) / scale); brackets, widths
/// and the gamma/delta parameters all live on that scale. Brackets hold
/// their functions at every positive-mass point; zero-mass points are not
/// certified.
struct ApproxBrackets {
  std::vector<Bracket> brackets;            // deduplicated
  std::vector<std::size_t> assignment;      // function -> bracket index
  std::vector<Rational> boundary_mass;      // mu(Xi(f)) per function
  std::vector<Rational> widths;             // mu(upper - lower) per function
  Rational offset;
  Rational scale;
};

/// For each class member, quantizes block-wise essential envelopes to the
/// delta-grid, flattening the union of essential level boundaries
/// Xi(f) = union over 1 <= j <= floor(1/delta) of the essential boundaries
/// of ({f < j delta}, {f > j delta + gamma}). Whenever mu(Xi(f)) < delta the
/// resulting width is < gamma + 3 delta.
ApproxBrackets brackets_from_partition(const FunctionClass& cls, const Measure& mu,
                                       const Partition& pi, const Rational& gamma,
                                       const Rational& delta);

struct CrudePartitionResult {
  Partition partition;
  Rational max_boundary;          // max over family of mu(boundary)
  std::size_t worst_set = 0;      // family index achieving the max
};

/// Partition generated by the bracket set pairs {C-, C+}; at most 3^N
/// blocks. Every family member must satisfy C- subset C subset C+ for some
/// pair with mu(C+ minus C-) <= eps; the returned max set-boundary mass is
/// then <= eps (verified).
CrudePartitionResult crude_partition_from_brackets(
    const std::vector<std::pair<PointSet, PointSet>>& set_brackets, const Rational& eps,
    const Measure& mu, const SetFamily& family);

}  // namespace gcl
