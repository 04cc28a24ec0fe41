#pragma once

#include <span>
#include <vector>

#include "gcl/point_set.hpp"
#include "gcl/rational.hpp"

namespace gcl {

enum class NumericMode { kExact, kApproximate };

/// Probability weights on domain points, stored as exact rationals in both
/// modes (doubles are dyadic and convert without loss). A positive residual
/// represents mass living outside a truncated domain; weights + residual sum
/// to 1 exactly in exact mode, and within 1e-12 in approximate mode.
class Measure {
 public:
  static Measure exact(std::vector<Rational> weights, Rational residual = Rational(0));
  static Measure approximate(const std::vector<double>& weights);
  static Measure uniform(std::size_t n);
  static Measure point_mass(std::size_t n, std::size_t at);

  std::size_t size() const { return weights_.size(); }
  NumericMode mode() const { return mode_; }
  const Rational& weight(std::size_t i) const { return weights_[i]; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& residual() const { return residual_; }

  Rational mass(const PointSet& set) const;

  /// Integral of a pointwise-given function against the weights.
  Rational integral(std::span<const Rational> values) const;

 private:
  Measure(std::vector<Rational> weights, Rational residual, NumericMode mode);
  void validate() const;

  std::vector<Rational> weights_;
  Rational residual_;
  NumericMode mode_;
};

}  // namespace gcl
