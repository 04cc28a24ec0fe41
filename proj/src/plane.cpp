#include "gcl/plane.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gcl/parallel.hpp"
#include "gcl/rng.hpp"

namespace gcl {

namespace {

bool is_prime_trial(long q) {
  if (q < 2) return false;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// Normalized nonzero vectors of F_q^3: first nonzero coordinate is 1,
// lexicographic order.
std::vector<std::array<long, 3>> normalized_vectors(long q) {
  std::vector<std::array<long, 3>> out;
  out.push_back({0, 0, 1});
  for (long c = 0; c < q; ++c) out.push_back({0, 1, c});
  for (long b = 0; b < q; ++b)
    for (long c = 0; c < q; ++c) out.push_back({1, b, c});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ProjectivePlane build_plane(long q) {
  if (q < 2) throw std::invalid_argument("order must be at least 2");
  if (!is_prime_trial(q)) throw std::invalid_argument("order must be prime");

  ProjectivePlane plane;
  plane.q = q;
  plane.m = static_cast<std::size_t>(q) * q + q + 1;
  plane.points = normalized_vectors(q);
  plane.line_functionals = plane.points;  // same normalization for the dual

  std::vector<PointSet> lines;
  lines.reserve(plane.m);
  for (const auto& u : plane.line_functionals) {
    PointSet line(plane.m);
    for (std::size_t p = 0; p < plane.m; ++p) {
      const auto& v = plane.points[p];
      long dot = (u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) % q;
      if (dot == 0) line.set(p);
    }
    lines.push_back(std::move(line));
  }
  plane.lines = SetFamily(plane.m, std::move(lines));

  if (!verify_plane(plane).all()) throw std::runtime_error("plane axioms failed");
  return plane;
}

PlaneAxiomReport verify_plane(const ProjectivePlane& plane) {
  PlaneAxiomReport report;
  std::size_t m = plane.m;
  report.counts_match = plane.points.size() == m && plane.lines.size() == m &&
                        m == static_cast<std::size_t>(plane.q) * plane.q + plane.q + 1;

  std::size_t line_points = static_cast<std::size_t>(plane.q) + 1;
  report.line_size = true;
  for (std::size_t l = 0; l < plane.lines.size(); ++l)
    if (plane.lines.set(l).count() != line_points) report.line_size = false;

  // Lines through each point, as masks for the pair check.
  std::vector<PointSet> pencils(m, PointSet(plane.lines.size()));
  for (std::size_t l = 0; l < plane.lines.size(); ++l)
    plane.lines.set(l).for_each([&](std::size_t p) { pencils[p].set(l); });

  report.point_degree = true;
  for (const auto& pencil : pencils)
    if (pencil.count() != line_points) report.point_degree = false;

  report.unique_line_per_pair = true;
  for (std::size_t p = 0; p < m && report.unique_line_per_pair; ++p)
    for (std::size_t r = p + 1; r < m; ++r)
      if ((pencils[p] & pencils[r]).count() != 1) {
        report.unique_line_per_pair = false;
        break;
      }
  return report;
}

namespace {

// max over lines of card(boundary)/m given block point sets.
Rational boundary_objective(const ProjectivePlane& plane, const std::vector<PointSet>& blocks) {
  std::size_t worst = 0;
  for (std::size_t l = 0; l < plane.lines.size(); ++l) {
    const PointSet& line = plane.lines.set(l);
    std::size_t boundary = 0;
    for (const auto& block : blocks)
      if (block.intersects(line) && !block.is_subset_of(line)) boundary += block.count();
    worst = std::max(worst, boundary);
  }
  return Rational(static_cast<long>(worst), static_cast<long>(plane.m));
}

std::vector<PointSet> blocks_of_labels(const std::vector<int>& labels, int k, std::size_t m) {
  std::vector<PointSet> blocks(k, PointSet(m));
  for (std::size_t p = 0; p < m; ++p) blocks[labels[p]].set(p);
  return blocks;
}

// Exhaustive minimum over restricted-growth labelings with exactly k blocks.
void exhaustive_minimum(const ProjectivePlane& plane, int k, BoundaryMinimum& best) {
  std::size_t m = plane.m;
  std::vector<int> labels(m, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int used) {
    if (static_cast<int>(m - pos) < k - used) return;  // cannot reach k blocks
    if (pos == m) {
      if (used != k) return;
      auto blocks = blocks_of_labels(labels, k, m);
      Rational value = boundary_objective(plane, blocks);
      if (value < best.value || (value == best.value && labels < best.partition.labels())) {
        best.value = value;
        best.partition = Partition(labels);
      }
      return;
    }
    int limit = std::min(used + 1, k);
    for (int b = 0; b < limit; ++b) {
      labels[pos] = b;
      rec(pos + 1, std::max(used, b + 1));
    }
    labels[pos] = 0;
  };
  rec(0, 0);
  best.method = SearchMethod::kExhaustive;
}

struct RestartOutcome {
  Rational value;
  std::vector<int> labels;
};

RestartOutcome local_search_restart(const ProjectivePlane& plane, int k, std::uint64_t seed,
                                    std::uint64_t eval_budget) {
  std::size_t m = plane.m;
  SplitMix64 rng(seed);

  // Random start with every block nonempty: first k points seed the blocks.
  std::vector<int> labels(m);
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  for (std::size_t i = m; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  for (std::size_t i = 0; i < m; ++i)
    labels[order[i]] = i < static_cast<std::size_t>(k) ? static_cast<int>(i)
                                                       : static_cast<int>(rng.below(k));

  std::vector<std::size_t> block_sizes(k, 0);
  for (auto l : labels) ++block_sizes[l];

  auto evaluate = [&](const std::vector<int>& ls) {
    return boundary_objective(plane, blocks_of_labels(ls, k, m));
  };

  Rational current = evaluate(labels);
  std::uint64_t evals = 1;
  bool improved = true;
  while (improved && evals < eval_budget) {
    improved = false;
    for (std::size_t p = 0; p < m && evals < eval_budget; ++p) {
      int from = labels[p];
      if (block_sizes[from] == 1) continue;  // keep blocks nonempty
      for (int to = 0; to < k && evals < eval_budget; ++to) {
        if (to == from) continue;
        labels[p] = to;
        Rational value = evaluate(labels);
        ++evals;
        if (value < current) {
          current = value;
          --block_sizes[from];
          ++block_sizes[to];
          improved = true;
          break;
        }
        labels[p] = from;
      }
      if (improved) break;
    }
  }
  return {current, labels};
}

}  // namespace

Rational max_line_boundary(const ProjectivePlane& plane, const Partition& pi) {
  if (pi.domain_size() != plane.m) throw std::invalid_argument("partition size mismatch");
  return boundary_objective(plane, pi.blocks());
}

BoundaryMinimum minimize_boundary(const ProjectivePlane& plane, int k, std::uint64_t budget,
                                  std::uint64_t seed, int restarts, int threads) {
  if (k < 1) throw std::invalid_argument("block count must be positive");
  if (k > static_cast<int>(plane.m)) throw std::invalid_argument("more blocks than points");
  std::size_t m = plane.m;

  BoundaryMinimum best{Partition::trivial(m), Rational(2), SearchMethod::kExhaustive};

  if (k == 1) {
    best.partition = Partition::trivial(m);
    best.value = boundary_objective(plane, best.partition.blocks());
    return best;
  }
  if (k == static_cast<int>(m)) {
    best.partition = Partition::singletons(m);
    best.value = boundary_objective(plane, best.partition.blocks());
    return best;
  }

  // k^m state estimate for the exhaustive route.
  double states = 1;
  for (std::size_t i = 0; i < m && states <= 1e7; ++i) states *= k;
  if (states <= 1e7) {
    exhaustive_minimum(plane, k, best);
    return best;
  }

  best.method = SearchMethod::kLocalSearch;
  std::uint64_t per_restart = std::max<std::uint64_t>(1, budget / std::max(restarts, 1));
  std::vector<RestartOutcome> outcomes(restarts);
  parallel_for(restarts, threads, [&](std::size_t r) {
    outcomes[r] = local_search_restart(plane, k, seed + r, per_restart);
  });
  // Deterministic reduction: best value, then lexicographically smallest
  // canonical labeling.
  bool first = true;
  for (auto& outcome : outcomes) {
    Partition candidate(outcome.labels);
    if (first || outcome.value < best.value ||
        (outcome.value == best.value && candidate.labels() < best.partition.labels())) {
      best.value = outcome.value;
      best.partition = candidate;
      first = false;
    }
  }
  return best;
}

AlonCheck alon_bound_check(const ProjectivePlane& plane, const Rational& eps, int k,
                           std::uint64_t budget, std::uint64_t seed, int restarts, int threads) {
  AlonCheck check;
  check.achieved = Rational(0);
  // Hypothesis k^2 <= sqrt(m) (1 - eps), compared exactly as k^4 <= m (1-eps)^2.
  Rational one_minus(1 - eps);
  if (one_minus < 0) {
    check.vacuous = true;
    return check;
  }
  Rational lhs = Rational(k) * k * k * k;
  Rational rhs = Rational(static_cast<long>(plane.m)) * one_minus * one_minus;
  check.hypothesis_holds = lhs <= rhs;
  if (!check.hypothesis_holds) {
    check.vacuous = true;
    return check;
  }
  BoundaryMinimum minimum = minimize_boundary(plane, k, budget, seed, restarts, threads);
  check.achieved = minimum.value;
  check.method = minimum.method;
  check.falsified = !(minimum.value > eps);
  return check;
}

}  // namespace gcl
