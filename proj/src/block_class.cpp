#include "gcl/block_class.hpp"

#include <stdexcept>

#include "gcl/plane.hpp"

namespace gcl {

BlockStructure::BlockStructure(std::vector<long> primes_) : primes(std::move(primes_)) {
  if (primes.empty()) throw std::invalid_argument("at least one block required");
  long previous = 1;
  for (long q : primes) {
    if (q <= previous) throw std::invalid_argument("primes must be strictly increasing");
    previous = q;
    block_sizes.push_back(static_cast<std::size_t>(q) * q + q + 1);
  }
  offsets.resize(primes.size());
  std::size_t offset = 0;
  for (std::size_t j = 0; j < primes.size(); ++j) {
    offsets[j] = offset;
    offset += block_sizes[j];
  }
}

BlockClass build_block_class(const BlockStructure& structure) {
  constexpr std::size_t kMaxPoints = 100000;
  if (structure.total_size() > kMaxPoints)
    throw std::invalid_argument("materialized domain exceeds the size cap");

  std::size_t total = structure.total_size();
  std::vector<std::string> labels(total);
  std::vector<PointSet> sets;
  for (std::size_t j = 0; j < structure.truncation(); ++j) {
    ProjectivePlane plane = build_plane(structure.primes[j]);
    std::size_t offset = structure.offsets[j];
    for (std::size_t p = 0; p < plane.m; ++p)
      labels[offset + p] = "block " + std::to_string(j) + ", point " + std::to_string(p);
    for (std::size_t l = 0; l < plane.lines.size(); ++l) {
      PointSet shifted(total);
      plane.lines.set(l).for_each([&](std::size_t p) { shifted.set(offset + p); });
      sets.push_back(std::move(shifted));
    }
  }
  return BlockClass{FiniteDomain(total, std::move(labels)), SetFamily(total, std::move(sets))};
}

Measure block_measure(const BlockStructure& structure, const std::vector<Rational>& p) {
  if (p.size() != structure.truncation())
    throw std::invalid_argument("one weight per materialized block required");
  Rational total(0);
  for (const auto& pj : p) {
    if (pj < 0) throw std::invalid_argument("negative block weight");
    total += pj;
  }
  if (total > 1) throw std::invalid_argument("block weights exceed total mass 1");

  std::vector<Rational> weights(structure.total_size(), Rational(0));
  for (std::size_t j = 0; j < structure.truncation(); ++j) {
    Rational per_point = p[j] / Rational(static_cast<long>(structure.block_sizes[j]));
    for (std::size_t i = 0; i < structure.block_sizes[j]; ++i)
      weights[structure.offsets[j] + i] = per_point;
  }
  return Measure::exact(std::move(weights), Rational(1) - total);
}

}  // namespace gcl
