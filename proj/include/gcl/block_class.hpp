#pragma once

#include <vector>

#include "gcl/domain.hpp"
#include "gcl/function_class.hpp"
#include "gcl/measure.hpp"

namespace gcl {

/// Consecutive blocks of sizes q_j^2 + q_j + 1 for strictly increasing
/// primes q_j; block j occupies indices [offsets[j], offsets[j] + sizes[j]).
struct BlockStructure {
  explicit BlockStructure(std::vector<long> primes_);

  std::vector<long> primes;
  std::vector<std::size_t> block_sizes;
  std::vector<std::size_t> offsets;

  std::size_t truncation() const { return primes.size(); }
  std::size_t total_size() const { return offsets.back() + block_sizes.back(); }
};

struct BlockClass {
  FiniteDomain domain;
  SetFamily family;
};

/// Disjoint union of the planes' line families, each shifted into its
/// block. Domain points get "block j, point i" labels.
BlockClass build_block_class(const BlockStructure& structure);

/// Measure with weight p_j / m_j on each point of block j. The p_j may sum
/// to less than 1; the remainder is recorded as residual mass, so values
/// computed on the truncation are lower bounds for the untruncated object.
Measure block_measure(const BlockStructure& structure, const std::vector<Rational>& p);

}  // namespace gcl
