#include "gcl/covers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "gcl/parallel.hpp"

namespace gcl {

Rational Bracket::width(const Measure& mu) const {
  if (lower.size() != mu.size() || upper.size() != mu.size())
    throw std::invalid_argument("bracket size mismatch");
  Rational w(0);
  for (std::size_t x = 0; x < lower.size(); ++x) {
    if (lower[x] > upper[x]) throw std::invalid_argument("bracket not pointwise ordered");
    if (mu.weight(x) != 0) w += mu.weight(x) * (upper[x] - lower[x]);
  }
  return w;
}

bool Bracket::contains(std::span<const Rational> f) const {
  for (std::size_t x = 0; x < lower.size(); ++x)
    if (f[x] < lower[x] || f[x] > upper[x]) return false;
  return true;
}

bool Bracket::contains_ae(std::span<const Rational> f, const Measure& mu) const {
  for (std::size_t x = 0; x < lower.size(); ++x)
    if (mu.weight(x) > 0 && (f[x] < lower[x] || f[x] > upper[x])) return false;
  return true;
}

Bracket envelope_bracket(const FunctionClass& cls, const std::vector<std::size_t>& group) {
  if (group.empty()) throw std::invalid_argument("empty group");
  Bracket b;
  b.lower.assign(cls.row(group[0]).begin(), cls.row(group[0]).end());
  b.upper = b.lower;
  for (std::size_t i = 1; i < group.size(); ++i)
    for (std::size_t x = 0; x < b.lower.size(); ++x) {
      const Rational& v = cls.value(group[i], x);
      if (v < b.lower[x]) b.lower[x] = v;
      if (v > b.upper[x]) b.upper[x] = v;
    }
  return b;
}

Rational l1_distance(const FunctionClass& cls, std::size_t i, std::size_t j, const Measure& mu) {
  if (i >= cls.n_functions() || j >= cls.n_functions())
    throw std::invalid_argument("function index out of range");
  if (mu.size() != cls.domain_size()) throw std::invalid_argument("measure size mismatch");
  Rational d(0);
  for (std::size_t x = 0; x < cls.domain_size(); ++x)
    if (mu.weight(x) != 0) d += mu.weight(x) * rational_abs(cls.value(i, x) - cls.value(j, x));
  return d;
}

std::vector<std::vector<Rational>> l1_distance_matrix(const FunctionClass& cls, const Measure& mu,
                                                      int threads) {
  std::size_t n = cls.n_functions();
  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n, Rational(0)));
  parallel_for(n, threads, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) dist[i][j] = l1_distance(cls, i, j, mu);
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) dist[i][j] = dist[j][i];
  return dist;
}

namespace {

using Mask = std::uint32_t;
constexpr std::size_t kNone = static_cast<std::size_t>(-1);
constexpr std::size_t kMaskBudget = 500000;  // enumeration safety valve

// Minimum set cover over explicit candidate masks: greedy upper bound, then
// branch and bound on the uncovered element with the fewest candidates.
class SetCoverSolver {
 public:
  SetCoverSolver(std::size_t n, std::vector<Mask> cands) : n_(n), candidates_(std::move(cands)) {
    std::sort(candidates_.begin(), candidates_.end());
    candidates_.erase(std::unique(candidates_.begin(), candidates_.end()), candidates_.end());
    std::vector<Mask> maximal;
    for (Mask c : candidates_) {
      bool dominated = false;
      for (Mask d : candidates_)
        if (d != c && (c & ~d) == 0) {
          dominated = true;
          break;
        }
      if (!dominated) maximal.push_back(c);
    }
    candidates_ = std::move(maximal);
  }

  std::size_t optimum(std::vector<Mask>& choice) {
    Mask all = n_ >= 32 ? ~Mask{0} : (Mask{1} << n_) - 1;
    std::vector<Mask> greedy_picks;
    std::size_t ub = greedy(all, greedy_picks);
    if (ub == kNone) throw std::runtime_error("no feasible cover");
    std::vector<Mask> exact_choice;
    std::size_t exact = solve(all, ub - 1, exact_choice);
    if (exact == kNone) {
      choice = std::move(greedy_picks);
      return ub;
    }
    choice = std::move(exact_choice);
    return exact;
  }

 private:
  std::size_t greedy(Mask uncovered, std::vector<Mask>& picks) const {
    std::size_t used = 0;
    while (uncovered) {
      Mask best = 0;
      int best_gain = 0;
      for (Mask c : candidates_) {
        int gain = __builtin_popcount(c & uncovered);
        if (gain > best_gain) {
          best_gain = gain;
          best = c;
        }
      }
      if (best_gain == 0) return kNone;
      picks.push_back(best);
      uncovered &= ~best;
      ++used;
    }
    return used;
  }

  // Minimum cover of `uncovered` using at most `limit` sets, or kNone.
  std::size_t solve(Mask uncovered, std::size_t limit, std::vector<Mask>& choice) {
    if (!uncovered) {
      choice.clear();
      return 0;
    }
    if (limit == 0) return kNone;
    int pivot = -1;
    std::size_t fewest = kNone;
    int widest = 0;
    for (std::size_t e = 0; e < n_; ++e) {
      if (!(uncovered >> e & 1)) continue;
      std::size_t cnt = 0;
      for (Mask c : candidates_)
        if (c >> e & 1) {
          ++cnt;
          widest = std::max(widest, __builtin_popcount(c & uncovered));
        }
      if (cnt < fewest) {
        fewest = cnt;
        pivot = static_cast<int>(e);
      }
    }
    if (fewest == 0) return kNone;
    // Counting bound: even the widest candidate cannot beat this many sets.
    std::size_t need =
        (static_cast<std::size_t>(__builtin_popcount(uncovered)) + widest - 1) / widest;
    if (need > limit) return kNone;

    std::size_t best = kNone;
    std::vector<Mask> best_choice, sub;
    for (Mask c : candidates_) {
      if (!(c >> pivot & 1)) continue;
      std::size_t sub_limit = (best == kNone ? limit : best - 1) - 1;
      std::size_t rest = solve(uncovered & ~c, sub_limit, sub);
      if (rest == kNone) continue;
      if (best == kNone || rest + 1 < best) {
        best = rest + 1;
        best_choice.clear();
        best_choice.push_back(c);
        best_choice.insert(best_choice.end(), sub.begin(), sub.end());
      }
    }
    if (best != kNone) choice = std::move(best_choice);
    return best;
  }

  std::size_t n_;
  std::vector<Mask> candidates_;
};

// Enumerates every group whose envelope width is <= bound (feasibility is
// downward closed, so depth-first extension with incremental envelopes is
// exhaustive). Groups are masks over function indices.
std::vector<Mask> all_feasible_group_masks(const FunctionClass& cls, const Measure& mu,
                                           const Rational& bound) {
  std::size_t n = cls.n_functions();
  std::vector<Mask> masks;
  std::vector<Rational> lo(cls.domain_size()), hi(cls.domain_size());

  std::function<void(Mask, std::size_t, const Rational&)> extend = [&](Mask mask,
                                                                       std::size_t next,
                                                                       const Rational& width) {
    if (masks.size() > kMaskBudget)
      throw std::runtime_error("feasible-group enumeration exceeded budget");
    for (std::size_t f = next; f < n; ++f) {
      Rational new_width = width;
      std::vector<std::pair<std::size_t, std::pair<Rational, Rational>>> undo;
      for (std::size_t x = 0; x < cls.domain_size(); ++x) {
        const Rational& v = cls.value(f, x);
        if (v < lo[x] || v > hi[x]) {
          undo.push_back({x, {lo[x], hi[x]}});
          Rational old_span = hi[x] - lo[x];
          if (v < lo[x]) lo[x] = v;
          if (v > hi[x]) hi[x] = v;
          if (mu.weight(x) != 0) new_width += mu.weight(x) * (hi[x] - lo[x] - old_span);
        }
      }
      if (new_width <= bound) {
        Mask m = mask | (Mask{1} << f);
        masks.push_back(m);
        extend(m, f + 1, new_width);
      }
      for (auto& [x, pair] : undo) {
        lo[x] = pair.first;
        hi[x] = pair.second;
      }
    }
  };

  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t x = 0; x < cls.domain_size(); ++x) lo[x] = hi[x] = cls.value(f, x);
    masks.push_back(Mask{1} << f);
    extend(Mask{1} << f, f + 1, Rational(0));
  }
  return masks;
}

std::vector<std::size_t> mask_to_group(Mask m) {
  std::vector<std::size_t> g;
  for (std::size_t i = 0; i < 32; ++i)
    if (m >> i & 1) g.push_back(i);
  return g;
}

std::vector<std::size_t> all_functions(std::size_t n) {
  std::vector<std::size_t> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = i;
  return g;
}

void fill_assignment(CoverResult& result, std::size_t n) {
  result.assignment.assign(n, kNone);
  for (std::size_t w = 0; w < result.groups.size(); ++w)
    for (auto f : result.groups[w])
      if (result.assignment[f] == kNone) result.assignment[f] = w;
}

std::vector<Rational> midpoint_of(const Bracket& env) {
  std::vector<Rational> mid(env.lower.size());
  for (std::size_t x = 0; x < env.lower.size(); ++x) mid[x] = (env.lower[x] + env.upper[x]) / 2;
  return mid;
}

std::vector<Rational> distances_to_center(const FunctionClass& cls, const Measure& mu,
                                          const std::vector<Rational>& center) {
  std::vector<Rational> dists(cls.n_functions(), Rational(0));
  for (std::size_t f = 0; f < cls.n_functions(); ++f)
    for (std::size_t x = 0; x < cls.domain_size(); ++x)
      if (mu.weight(x) != 0)
        dists[f] += mu.weight(x) * rational_abs(cls.value(f, x) - center[x]);
  return dists;
}

}  // namespace

CoverResult covering_number(const FunctionClass& cls, const Rational& eps, const Measure& mu,
                            SolveMode mode) {
  if (eps < 0) throw std::invalid_argument("eps must be nonnegative");
  if (mu.size() != cls.domain_size()) throw std::invalid_argument("measure size mismatch");
  std::size_t n = cls.n_functions();
  CoverResult result;
  result.epsilon = eps;

  auto dist = l1_distance_matrix(cls, mu);

  if (mode == SolveMode::kGreedy) {
    std::vector<bool> covered(n, false);
    std::size_t remaining = n;
    while (remaining) {
      std::size_t best_center = 0, best_gain = 0;
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t gain = 0;
        for (std::size_t f = 0; f < n; ++f)
          if (!covered[f] && dist[c][f] <= eps) ++gain;
        if (gain > best_gain) {
          best_gain = gain;
          best_center = c;
        }
      }
      std::vector<std::size_t> group;
      for (std::size_t f = 0; f < n; ++f)
        if (!covered[f] && dist[best_center][f] <= eps) {
          covered[f] = true;
          group.push_back(f);
          --remaining;
        }
      result.centers.push_back(best_center);
      result.center_values.emplace_back();
      result.groups.push_back(std::move(group));
    }
    result.count = result.groups.size();
    result.certified = Certificate::kUpperBound;
    fill_assignment(result, n);
    return result;
  }

  if (n > 16) throw std::invalid_argument("exact covering capped at 16 functions");

  // One midpoint ball suffices when the whole class fits a 2eps-bracket.
  Bracket whole = envelope_bracket(cls, all_functions(n));
  if (whole.width(mu) <= 2 * eps) {
    result.count = 1;
    result.certified = Certificate::kExact;
    result.groups.push_back(all_functions(n));
    result.centers.push_back(CoverResult::kMidpointCenter);
    result.center_values.push_back(midpoint_of(whole));
    fill_assignment(result, n);
    return result;
  }

  // Candidate balls: class members, plus envelope midpoints of groups of
  // width <= 2*eps. The midpoints make any cover by 2eps-brackets restrict
  // to an eps-ball cover of the same cardinality.
  struct BallInfo {
    std::size_t center;
    std::vector<Rational> center_values;
  };
  std::map<Mask, BallInfo> ball_by_coverage;
  auto add_ball = [&](std::size_t center_index, std::vector<Rational> center_values,
                      const std::vector<Rational>& dists) {
    Mask coverage = 0;
    for (std::size_t f = 0; f < n; ++f)
      if (dists[f] <= eps) coverage |= Mask{1} << f;
    if (!coverage) return;
    ball_by_coverage.emplace(coverage, BallInfo{center_index, std::move(center_values)});
  };
  for (std::size_t c = 0; c < n; ++c) add_ball(c, {}, dist[c]);
  for (Mask m : all_feasible_group_masks(cls, mu, Rational(2 * eps))) {
    auto group = mask_to_group(m);
    auto mid = midpoint_of(envelope_bracket(cls, group));
    auto dists = distances_to_center(cls, mu, mid);
    add_ball(CoverResult::kMidpointCenter, std::move(mid), dists);
  }

  std::vector<Mask> candidates;
  candidates.reserve(ball_by_coverage.size());
  for (auto& [coverage, info] : ball_by_coverage) candidates.push_back(coverage);
  SetCoverSolver solver(n, candidates);
  std::vector<Mask> choice;
  result.count = solver.optimum(choice);
  result.certified = Certificate::kExact;
  for (Mask c : choice) {
    result.groups.push_back(mask_to_group(c));
    const auto& info = ball_by_coverage.at(c);
    result.centers.push_back(info.center);
    result.center_values.push_back(info.center_values);
  }
  fill_assignment(result, n);
  return result;
}

CoverResult packing_number(const FunctionClass& cls, const Rational& eps, const Measure& mu) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  std::size_t n = cls.n_functions();
  auto dist = l1_distance_matrix(cls, mu);
  CoverResult result;
  result.epsilon = eps;
  std::vector<std::size_t> kept;
  for (std::size_t f = 0; f < n; ++f) {
    bool separated = true;
    for (auto k : kept)
      if (dist[k][f] < eps) {
        separated = false;
        break;
      }
    if (separated) kept.push_back(f);
  }
  result.count = kept.size();
  result.certified = Certificate::kLowerBound;
  result.centers = kept;
  result.groups.push_back(kept);
  return result;
}

CoverResult bracketing_number(const FunctionClass& cls, const Rational& eps, const Measure& mu,
                              SolveMode mode) {
  if (eps < 0) throw std::invalid_argument("eps must be nonnegative");
  if (mu.size() != cls.domain_size()) throw std::invalid_argument("measure size mismatch");
  std::size_t n = cls.n_functions();
  CoverResult result;
  result.epsilon = eps;

  auto group_width = [&](const std::vector<std::size_t>& group) {
    return envelope_bracket(cls, group).width(mu);
  };

  if (mode == SolveMode::kGreedy) {
    // Largest-feasible-first: grow a group from the lowest uncovered
    // function, adding by index whatever keeps the width feasible.
    std::vector<bool> covered(n, false);
    for (std::size_t f = 0; f < n; ++f) {
      if (covered[f]) continue;
      std::vector<std::size_t> group{f};
      for (std::size_t g = 0; g < n; ++g) {
        if (g == f || covered[g]) continue;
        group.push_back(g);
        if (group_width(group) > eps) group.pop_back();
      }
      std::sort(group.begin(), group.end());
      for (auto g : group) covered[g] = true;
      result.brackets.push_back(envelope_bracket(cls, group));
      result.groups.push_back(std::move(group));
    }
    result.count = result.groups.size();
    result.certified = Certificate::kUpperBound;
    fill_assignment(result, n);
    return result;
  }

  if (n > 20) throw std::invalid_argument("exact bracketing capped at 20 functions");

  Bracket whole = envelope_bracket(cls, all_functions(n));
  if (whole.width(mu) <= eps) {
    result.count = 1;
    result.certified = Certificate::kExact;
    result.groups.push_back(all_functions(n));
    result.brackets.push_back(whole);
    fill_assignment(result, n);
    return result;
  }

  std::vector<Mask> feasible = all_feasible_group_masks(cls, mu, eps);
  SetCoverSolver solver(n, feasible);
  std::vector<Mask> choice;
  result.count = solver.optimum(choice);
  result.certified = Certificate::kExact;
  for (Mask c : choice) {
    auto group = mask_to_group(c);
    result.brackets.push_back(envelope_bracket(cls, group));
    result.groups.push_back(std::move(group));
  }
  fill_assignment(result, n);
  return result;
}

std::size_t bracketing_number_bruteforce(const FunctionClass& cls, const Rational& eps,
                                         const Measure& mu) {
  std::size_t n = cls.n_functions();
  if (n > 16) throw std::invalid_argument("brute force capped at 16 functions");
  std::size_t full = std::size_t{1} << n;
  std::vector<char> feasible(full, 0);
  for (std::size_t m = 1; m < full; ++m)
    feasible[m] = envelope_bracket(cls, mask_to_group(static_cast<Mask>(m))).width(mu) <= eps;
  std::vector<std::size_t> cost(full, kNone);
  cost[0] = 0;
  for (std::size_t m = 1; m < full; ++m) {
    std::size_t low = m & (~m + 1);
    for (std::size_t s = m; s; s = (s - 1) & m) {
      if (!(s & low) || !feasible[s]) continue;
      std::size_t rest = cost[m & ~s];
      if (rest != kNone && rest + 1 < cost[m]) cost[m] = rest + 1;
    }
  }
  return cost[full - 1];
}

std::size_t covering_number_bruteforce(const FunctionClass& cls, const Rational& eps,
                                       const Measure& mu) {
  std::size_t n = cls.n_functions();
  if (n > 16) throw std::invalid_argument("brute force capped at 16 functions");
  std::size_t full = std::size_t{1} << n;
  auto dist = l1_distance_matrix(cls, mu);

  std::vector<std::vector<Rational>> center_dists;
  for (std::size_t c = 0; c < n; ++c) center_dists.push_back(dist[c]);
  for (std::size_t s = 1; s < full; ++s) {
    Bracket env = envelope_bracket(cls, mask_to_group(static_cast<Mask>(s)));
    if (env.width(mu) > 2 * eps) continue;
    center_dists.push_back(distances_to_center(cls, mu, midpoint_of(env)));
  }
  std::vector<char> coverable(full, 0);
  for (std::size_t m = 1; m < full; ++m) {
    for (const auto& row : center_dists) {
      bool ok = true;
      for (std::size_t f = 0; f < n && ok; ++f)
        if ((m >> f & 1) && row[f] > eps) ok = false;
      if (ok) {
        coverable[m] = 1;
        break;
      }
    }
  }
  std::vector<std::size_t> cost(full, kNone);
  cost[0] = 0;
  for (std::size_t m = 1; m < full; ++m) {
    std::size_t low = m & (~m + 1);
    for (std::size_t s = m; s; s = (s - 1) & m) {
      if (!(s & low) || !coverable[s]) continue;
      std::size_t rest = cost[m & ~s];
      if (rest != kNone && rest + 1 < cost[m]) cost[m] = rest + 1;
    }
  }
  return cost[full - 1];
}

}  // namespace gcl
