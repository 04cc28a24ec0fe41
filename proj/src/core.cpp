#include <map>
#include <stdexcept>

#include "gcl/domain.hpp"
#include "gcl/function_class.hpp"
#include "gcl/levels.hpp"
#include "gcl/measure.hpp"
#include "gcl/partition.hpp"

namespace gcl {

FiniteDomain::FiniteDomain(std::size_t size_, std::optional<std::vector<std::string>> labels_)
    : size(size_), labels(std::move(labels_)) {
  if (size < 1) throw std::invalid_argument("domain must have at least one point");
  if (labels && labels->size() != size)
    throw std::invalid_argument("label count does not match domain size");
}

Measure::Measure(std::vector<Rational> weights, Rational residual, NumericMode mode)
    : weights_(std::move(weights)), residual_(std::move(residual)), mode_(mode) {
  validate();
}

void Measure::validate() const {
  if (weights_.empty()) throw std::invalid_argument("measure over empty domain");
  for (const auto& w : weights_)
    if (w < 0) throw std::invalid_argument("negative weight");
  if (residual_ < 0) throw std::invalid_argument("negative residual mass");
  Rational total = residual_;
  for (const auto& w : weights_) total += w;
  if (mode_ == NumericMode::kExact) {
    if (total != 1) throw std::invalid_argument("weights must sum to 1 in exact mode");
  } else {
    Rational err = rational_abs(total - 1);
    if (err > Rational(1, 1000000000000L))
      throw std::invalid_argument("weights must sum to 1 within 1e-12");
  }
}

Measure Measure::exact(std::vector<Rational> weights, Rational residual) {
  return Measure(std::move(weights), std::move(residual), NumericMode::kExact);
}

Measure Measure::approximate(const std::vector<double>& weights) {
  std::vector<Rational> exact_weights;
  exact_weights.reserve(weights.size());
  for (double w : weights) exact_weights.emplace_back(w);  // dyadic, lossless
  return Measure(std::move(exact_weights), Rational(0), NumericMode::kApproximate);
}

Measure Measure::uniform(std::size_t n) {
  if (n == 0) throw std::invalid_argument("measure over empty domain");
  return exact(std::vector<Rational>(n, Rational(1, static_cast<long>(n))));
}

Measure Measure::point_mass(std::size_t n, std::size_t at) {
  std::vector<Rational> w(n, Rational(0));
  w.at(at) = 1;
  return exact(std::move(w));
}

Rational Measure::mass(const PointSet& set) const {
  if (set.size() != weights_.size()) throw std::invalid_argument("point set size mismatch");
  Rational total(0);
  set.for_each([&](std::size_t p) { total += weights_[p]; });
  return total;
}

Rational Measure::integral(std::span<const Rational> values) const {
  if (values.size() != weights_.size()) throw std::invalid_argument("value vector size mismatch");
  Rational total(0);
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (weights_[i] != 0) total += weights_[i] * values[i];
  return total;
}

Levels::Levels(Rational alpha_, Rational beta_) : alpha(std::move(alpha_)), beta(std::move(beta_)) {
  if (!(alpha < beta)) throw std::invalid_argument("levels require alpha < beta");
}

SetFamily::SetFamily(std::size_t domain_size, std::vector<PointSet> sets)
    : domain_size_(domain_size), sets_(std::move(sets)) {
  for (const auto& s : sets_)
    if (s.size() != domain_size_) throw std::invalid_argument("set size mismatch");
}

FunctionClass::FunctionClass(std::vector<std::vector<Rational>> values)
    : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("function class must be nonempty");
  std::size_t n = values_[0].size();
  if (n == 0) throw std::invalid_argument("functions over empty domain");
  for (const auto& row : values_)
    if (row.size() != n) throw std::invalid_argument("ragged value matrix");
  kappa_minus_ = values_[0][0];
  kappa_plus_ = values_[0][0];
  for (const auto& row : values_)
    for (const auto& v : row) {
      if (v < kappa_minus_) kappa_minus_ = v;
      if (v > kappa_plus_) kappa_plus_ = v;
    }
}

FunctionClass FunctionClass::indicators(const SetFamily& family) {
  if (family.size() == 0) throw std::invalid_argument("empty set family");
  std::vector<std::vector<Rational>> values(family.size(),
                                            std::vector<Rational>(family.domain_size(), Rational(0)));
  for (std::size_t i = 0; i < family.size(); ++i)
    family.set(i).for_each([&](std::size_t p) { values[i][p] = 1; });
  return FunctionClass(std::move(values));
}

FunctionClass FunctionClass::subset(const std::vector<std::size_t>& indices) const {
  std::vector<std::vector<Rational>> values;
  values.reserve(indices.size());
  for (auto i : indices) values.push_back(values_.at(i));
  return FunctionClass(std::move(values));
}

Partition::Partition(std::vector<int> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("partition of empty domain");
  // Renumber blocks by first occurrence.
  std::map<int, int> renumber;
  int next = 0;
  for (auto& l : labels_) {
    auto [it, inserted] = renumber.emplace(l, next);
    if (inserted) ++next;
    l = it->second;
  }
  k_ = next;
}

Partition Partition::trivial(std::size_t n) { return Partition(std::vector<int>(n, 0)); }

Partition Partition::singletons(std::size_t n) {
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(i);
  return Partition(std::move(labels));
}

std::vector<PointSet> Partition::blocks() const {
  std::vector<PointSet> out(k_, PointSet(labels_.size()));
  for (std::size_t p = 0; p < labels_.size(); ++p) out[labels_[p]].set(p);
  return out;
}

Partition refine(const Partition& p1, const Partition& p2) {
  if (p1.domain_size() != p2.domain_size())
    throw std::invalid_argument("partitions over different domains");
  std::vector<int> labels(p1.domain_size());
  std::map<std::pair<int, int>, int> ids;
  for (std::size_t p = 0; p < labels.size(); ++p) {
    auto key = std::make_pair(p1.block_of(p), p2.block_of(p));
    auto [it, inserted] = ids.emplace(key, static_cast<int>(ids.size()));
    (void)inserted;
    labels[p] = it->second;
  }
  return Partition(std::move(labels));
}

Partition partition_generated_by(const SetFamily& sets) {
  if (sets.size() == 0) throw std::invalid_argument("empty set family");
  std::size_t n = sets.domain_size();
  std::vector<int> labels(n);
  std::map<std::vector<bool>, int> ids;
  std::vector<bool> signature(sets.size());
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t s = 0; s < sets.size(); ++s) signature[s] = sets.set(s).test(p);
    auto [it, inserted] = ids.emplace(signature, static_cast<int>(ids.size()));
    (void)inserted;
    labels[p] = it->second;
  }
  return Partition(std::move(labels));
}

}  // namespace gcl
