#include "gcl/shattering.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gcl/independence.hpp"

namespace gcl {

bool verify(const ShatterWitness& w, const FunctionClass& cls) {
  std::size_t n = w.points.size();
  if (n == 0 || n > kMaxPatternWidth) return false;
  if (w.selector.size() != (std::size_t{1} << n)) return false;
  for (std::size_t mask = 0; mask < w.selector.size(); ++mask) {
    std::size_t f = w.selector[mask];
    if (f >= cls.n_functions()) return false;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = cls.value(f, w.points[j]);
      if (mask >> j & 1) {
        if (!(v < w.levels.alpha)) return false;
      } else {
        if (!(v > w.levels.beta)) return false;
      }
    }
  }
  return true;
}

namespace {

// Candidate levels for a fixed list of points. Only the cuts of alpha and
// beta through the sorted distinct values matter; a cut pair (a, b), a <= b,
// is realizable with gap >= gamma iff w[b+1] - w[a] > gamma, where w carries
// the sentinels min-1 and max+1.
struct LevelSearch {
  std::vector<Rational> cuts;  // w_0 < w_1 < ... < w_{r+1}

  LevelSearch(const FunctionClass& cls, const std::vector<std::size_t>& points) {
    std::set<Rational> distinct;
    for (std::size_t f = 0; f < cls.n_functions(); ++f)
      for (auto p : points) distinct.insert(cls.value(f, p));
    cuts.reserve(distinct.size() + 2);
    cuts.push_back(*distinct.begin() - 1);
    for (const auto& v : distinct) cuts.push_back(v);
    cuts.push_back(*distinct.rbegin() + 1);
  }

  // Exact levels realizing cut pair (a, b) with beta - alpha >= gamma, or
  // nullopt if the pair cannot reach the gap.
  std::optional<Levels> realize(std::size_t a, std::size_t b, const Rational& gamma) const {
    const Rational& lo = cuts[a];        // alpha in (lo, hi_a]
    const Rational& hi_a = cuts[a + 1];
    const Rational& lo_b = cuts[b];      // beta in [lo_b, hi)
    const Rational& hi = cuts[b + 1];
    if (!(hi - lo > gamma)) return std::nullopt;
    Rational alpha = hi_a < hi - gamma ? hi_a : Rational((lo + hi - gamma) / 2);
    Rational beta = std::max(lo_b, Rational(alpha + gamma));
    return Levels(alpha, beta);
  }
};

// All pattern masks realized by the class on `points` at the given levels.
// A function realizes the mask of its trace iff no value lands in
// [alpha, beta]; realized[mask] keeps the lowest realizing function index.
bool realizes_all_patterns(const FunctionClass& cls, const std::vector<std::size_t>& points,
                           const Levels& levels, std::vector<std::size_t>& selector) {
  std::size_t n = points.size();
  std::size_t want = std::size_t{1} << n;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  selector.assign(want, kNone);
  std::size_t found = 0;
  for (std::size_t f = 0; f < cls.n_functions() && found < want; ++f) {
    std::size_t mask = 0;
    bool valid = true;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = cls.value(f, points[j]);
      if (v < levels.alpha) {
        mask |= std::size_t{1} << j;
      } else if (!(v > levels.beta)) {
        valid = false;
        break;
      }
    }
    if (valid && selector[mask] == kNone) {
      selector[mask] = f;
      ++found;
    }
  }
  return found == want;
}

}  // namespace

std::optional<ShatterWitness> is_gamma_shattered(const FunctionClass& cls, const Rational& gamma,
                                                 const std::vector<std::size_t>& points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  if (points.size() > kMaxPatternWidth)
    throw std::invalid_argument("point set exceeds pattern width cap");
  if (gamma <= 0) throw std::invalid_argument("gamma must be positive");
  std::set<std::size_t> dedup(points.begin(), points.end());
  if (dedup.size() != points.size()) throw std::invalid_argument("points must be distinct");
  for (auto p : points)
    if (p >= cls.domain_size()) throw std::invalid_argument("point out of domain");

  LevelSearch search(cls, points);
  std::size_t r = search.cuts.size() - 1;
  std::vector<std::size_t> selector;
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a; b < r; ++b) {
      auto levels = search.realize(a, b, gamma);
      if (!levels) continue;
      if (realizes_all_patterns(cls, points, *levels, selector))
        return ShatterWitness{points, *levels, std::move(selector)};
    }
  }
  return std::nullopt;
}

namespace {

void dimension_dfs(const FunctionClass& cls, const Rational& gamma, std::size_t cap,
                   std::vector<std::size_t>& current, std::size_t next, DimensionResult& best) {
  if (current.size() >= cap) return;
  for (std::size_t p = next; p < cls.domain_size(); ++p) {
    current.push_back(p);
    if (is_gamma_shattered(cls, gamma, current)) {
      best.dimension = std::max(best.dimension, current.size());
      dimension_dfs(cls, gamma, cap, current, p + 1, best);
    }
    current.pop_back();
  }
}

}  // namespace

DimensionResult gamma_dimension(const FunctionClass& cls, const Rational& gamma, std::size_t cap) {
  if (cap > kMaxPatternWidth) throw std::invalid_argument("cap exceeds pattern width cap");
  DimensionResult best;
  if (cap == 0) return best;
  std::vector<std::size_t> current;
  dimension_dfs(cls, gamma, cap, current, 0, best);
  best.capped = best.dimension == cap;
  return best;
}

DimensionResult vc_dimension(const SetFamily& family, std::size_t cap) {
  return gamma_dimension(FunctionClass::indicators(family), Rational(1, 2), cap);
}

namespace {

bool traces_shatter(const SetFamily& family, const std::vector<std::size_t>& points) {
  std::set<std::size_t> traces;
  for (std::size_t s = 0; s < family.size(); ++s) {
    std::size_t mask = 0;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (family.set(s).test(points[j])) mask |= std::size_t{1} << j;
    traces.insert(mask);
  }
  return traces.size() == (std::size_t{1} << points.size());
}

void traces_dfs(const SetFamily& family, std::size_t cap, std::vector<std::size_t>& current,
                std::size_t next, std::size_t& best) {
  if (current.size() >= cap) return;
  for (std::size_t p = next; p < family.domain_size(); ++p) {
    current.push_back(p);
    if (traces_shatter(family, current)) {
      best = std::max(best, current.size());
      traces_dfs(family, cap, current, p + 1, best);
    }
    current.pop_back();
  }
}

}  // namespace

std::size_t vc_dimension_by_traces(const SetFamily& family, std::size_t cap) {
  std::size_t best = 0;
  std::vector<std::size_t> current;
  traces_dfs(family, cap, current, 0, best);
  return best;
}

ShatterWitness assouad_shatter(const FunctionClass& cls, const IndependenceWitness& witness) {
  std::size_t k = witness.function_indices.size();
  std::size_t n = 0;
  while ((std::size_t{1} << n) < k) ++n;
  if ((std::size_t{1} << n) != k || k == 0)
    throw std::invalid_argument("witness size is not a power of two");
  if (!verify(witness, cls)) throw std::invalid_argument("invalid independence witness");

  // Function at list position m stands for the subset F of {1..n} with
  // characteristic mask m. Point x_j lives in the cell whose pattern puts
  // exactly the functions of the subsets containing j on the below side.
  std::vector<std::size_t> points(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t pattern = 0;
    for (std::size_t m = 0; m < k; ++m)
      if (m >> j & 1) pattern |= std::size_t{1} << m;
    points[j] = witness.cell_points[pattern];
  }
  ShatterWitness out{points, witness.levels, witness.function_indices};
  if (!verify(out, cls)) throw std::runtime_error("constructed shatter witness failed to verify");
  return out;
}

}  // namespace gcl
