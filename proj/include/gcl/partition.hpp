#pragma once

#include <vector>

#include "gcl/function_class.hpp"
#include "gcl/point_set.hpp"

namespace gcl {

/// Finite partition of a point domain given as a block labeling. Partitions
/// are canonical: block ids are assigned in order of first occurrence, so
/// equality of labelings is structural equality of partitions.
class Partition {
 public:
  /// Canonicalizes and validates: every block id in 0..k-1 must occur.
  explicit Partition(std::vector<int> labels);

  static Partition trivial(std::size_t n);
  static Partition singletons(std::size_t n);

  std::size_t domain_size() const { return labels_.size(); }
  int block_count() const { return k_; }
  int block_of(std::size_t point) const { return labels_[point]; }
  const std::vector<int>& labels() const { return labels_; }

  std::vector<PointSet> blocks() const;

  bool operator==(const Partition& other) const { return labels_ == other.labels_; }

 private:
  std::vector<int> labels_;
  int k_;
};

/// Common refinement of two partitions over the same domain.
Partition refine(const Partition& p1, const Partition& p2);

/// Coarsest partition in which every member of the family is a union of
/// blocks: points share a block iff they lie in exactly the same sets.
Partition partition_generated_by(const SetFamily& sets);

}  // namespace gcl
