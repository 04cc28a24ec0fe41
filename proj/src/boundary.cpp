#include "gcl/boundary.hpp"

#include <map>
#include <stdexcept>

namespace gcl {

PointSet essential_boundary(const Partition& pi, const PointSet& a, const PointSet& b,
                            const Measure& mu) {
  if (a.size() != pi.domain_size() || b.size() != pi.domain_size() ||
      mu.size() != pi.domain_size())
    throw std::invalid_argument("size mismatch");
  PointSet boundary(pi.domain_size());
  for (const auto& block : pi.blocks())
    if (mu.mass(block & a) > 0 && mu.mass(block & b) > 0) boundary |= block;
  return boundary;
}

ApproxBrackets brackets_from_partition(const FunctionClass& cls, const Measure& mu,
                                       const Partition& pi, const Rational& gamma,
                                       const Rational& delta) {
  if (delta <= 0) throw std::invalid_argument("delta must be positive");
  if (gamma <= 0) throw std::invalid_argument("gamma must be positive");
  if (pi.domain_size() != cls.domain_size() || mu.size() != cls.domain_size())
    throw std::invalid_argument("size mismatch");

  std::size_t n_points = cls.domain_size();
  ApproxBrackets out;
  out.offset = cls.kappa_minus();
  out.scale = cls.kappa_plus() > cls.kappa_minus() ? cls.kappa_plus() - cls.kappa_minus()
                                                   : Rational(1);

  auto scaled = [&](std::size_t f, std::size_t x) {
    return Rational((cls.value(f, x) - out.offset) / out.scale);
  };

  auto blocks = pi.blocks();
  long grid_top = rational_floor(Rational(1) / delta).get_si();
  Rational grid_cap = delta * Rational(rational_ceil(Rational(1) / delta));

  std::map<std::vector<Rational>, std::size_t> dedup;  // lower ++ upper -> index
  out.assignment.resize(cls.n_functions());
  out.boundary_mass.resize(cls.n_functions());
  out.widths.resize(cls.n_functions());

  for (std::size_t f = 0; f < cls.n_functions(); ++f) {
    // Xi(f): union of essential boundaries over the delta-grid of levels.
    PointSet xi(n_points);
    for (long j = 1; j <= grid_top; ++j) {
      Rational low_level = Rational(j) * delta;
      Rational high_level = low_level + gamma;
      PointSet below(n_points), above(n_points);
      for (std::size_t x = 0; x < n_points; ++x) {
        Rational v = scaled(f, x);
        if (v < low_level) below.set(x);
        if (v > high_level) above.set(x);
      }
      xi |= essential_boundary(pi, below, above, mu);
    }
    out.boundary_mass[f] = mu.mass(xi);

    Bracket bracket;
    bracket.lower.assign(n_points, Rational(0));
    bracket.upper.assign(n_points, Rational(0));
    for (const auto& block : blocks) {
      if (block.is_subset_of(xi)) continue;
      // Essential sup/inf of f on the block (0 when the block is mu-null).
      bool seen = false;
      Rational ess_sup(0), ess_inf(0);
      block.for_each([&](std::size_t x) {
        if (mu.weight(x) <= 0) return;
        Rational v = scaled(f, x);
        if (!seen) {
          ess_sup = ess_inf = v;
          seen = true;
        } else {
          if (v > ess_sup) ess_sup = v;
          if (v < ess_inf) ess_inf = v;
        }
      });
      Rational up = delta * Rational(rational_ceil(ess_sup / delta));
      Rational lo = delta * Rational(rational_floor(ess_inf / delta));
      block.for_each([&](std::size_t x) {
        bracket.upper[x] = up;
        bracket.lower[x] = lo;
      });
    }
    xi.for_each([&](std::size_t x) {
      bracket.upper[x] = grid_cap;
      bracket.lower[x] = 0;
    });

    out.widths[f] = bracket.width(mu);
    std::vector<Rational> key = bracket.lower;
    key.insert(key.end(), bracket.upper.begin(), bracket.upper.end());
    auto [it, inserted] = dedup.emplace(std::move(key), out.brackets.size());
    if (inserted) out.brackets.push_back(std::move(bracket));
    out.assignment[f] = it->second;

    // Contract checks: containment at positive-mass points, and the width
    // bound when the boundary term is small.
    std::vector<Rational> scaled_row(n_points);
    for (std::size_t x = 0; x < n_points; ++x) scaled_row[x] = scaled(f, x);
    if (!out.brackets[out.assignment[f]].contains_ae(scaled_row, mu))
      throw std::runtime_error("bracket fails to contain its function a.e.");
    if (out.boundary_mass[f] < delta && !(out.widths[f] < gamma + 3 * delta))
      throw std::runtime_error("bracket width bound violated");
  }
  return out;
}

CrudePartitionResult crude_partition_from_brackets(
    const std::vector<std::pair<PointSet, PointSet>>& set_brackets, const Rational& eps,
    const Measure& mu, const SetFamily& family) {
  if (set_brackets.empty()) throw std::invalid_argument("no bracket pairs");
  std::size_t n = family.domain_size();

  // Precondition: every family member fits some pair.
  for (std::size_t c = 0; c < family.size(); ++c) {
    bool fits = false;
    for (const auto& [lo, hi] : set_brackets) {
      if (mu.mass(hi.set_minus(lo)) > eps) continue;
      if (lo.is_subset_of(family.set(c)) && family.set(c).is_subset_of(hi)) {
        fits = true;
        break;
      }
    }
    if (!fits)
      throw std::invalid_argument("family set " + std::to_string(c) +
                                  " is not enclosed by any bracket pair within eps");
  }

  std::vector<PointSet> generators;
  for (const auto& [lo, hi] : set_brackets) {
    generators.push_back(lo);
    generators.push_back(hi);
  }
  Partition pi = partition_generated_by(SetFamily(n, std::move(generators)));

  auto blocks = pi.blocks();
  CrudePartitionResult result{pi, Rational(0), 0};
  for (std::size_t c = 0; c < family.size(); ++c) {
    PointSet boundary(n);
    for (const auto& block : blocks)
      if (block.intersects(family.set(c)) && !block.is_subset_of(family.set(c)))
        boundary |= block;
    Rational mass = mu.mass(boundary);
    if (mass > result.max_boundary) {
      result.max_boundary = mass;
      result.worst_set = c;
    }
  }
  if (result.max_boundary > eps)
    throw std::runtime_error("generated partition exceeds the eps boundary guarantee");
  return result;
}

}  // namespace gcl
