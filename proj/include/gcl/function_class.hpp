#pragma once

#include <span>
#include <vector>

#include "gcl/point_set.hpp"
#include "gcl/rational.hpp"

namespace gcl {

/// A family of point subsets over a common finite domain.
class SetFamily {
 public:
  SetFamily(std::size_t domain_size, std::vector<PointSet> sets);

  std::size_t domain_size() const { return domain_size_; }
  std::size_t size() const { return sets_.size(); }
  const PointSet& set(std::size_t i) const { return sets_[i]; }
  const std::vector<PointSet>& sets() const { return sets_; }

 private:
  std::size_t domain_size_;
  std::vector<PointSet> sets_;
};

/// Uniformly bounded real-valued functions on a finite domain stored as an
/// exact value matrix [function][point]. Bounds are recomputed tight on
/// construction.
class FunctionClass {
 public:
  explicit FunctionClass(std::vector<std::vector<Rational>> values);

  /// 0/1 indicator functions of the family's sets.
  static FunctionClass indicators(const SetFamily& family);

  std::size_t n_functions() const { return values_.size(); }
  std::size_t domain_size() const { return values_[0].size(); }
  const Rational& value(std::size_t f, std::size_t x) const { return values_[f][x]; }
  std::span<const Rational> row(std::size_t f) const { return values_[f]; }
  const Rational& kappa_minus() const { return kappa_minus_; }
  const Rational& kappa_plus() const { return kappa_plus_; }

  FunctionClass subset(const std::vector<std::size_t>& indices) const;

 private:
  std::vector<std::vector<Rational>> values_;
  Rational kappa_minus_;
  Rational kappa_plus_;
};

}  // namespace gcl
