#include "gcl/independence.hpp"

#include <stdexcept>

namespace gcl {

bool verify(const IndependenceWitness& w, const FunctionClass& cls) {
  std::size_t k = w.function_indices.size();
  if (k == 0 || k > kMaxPatternWidth) return false;
  if (w.cell_points.size() != (std::size_t{1} << k)) return false;
  for (std::size_t mask = 0; mask < w.cell_points.size(); ++mask) {
    std::size_t x = w.cell_points[mask];
    if (x >= cls.domain_size()) return false;
    for (std::size_t j = 0; j < k; ++j) {
      const Rational& v = cls.value(w.function_indices[j], x);
      if (mask >> j & 1) {
        if (!(v < w.levels.alpha)) return false;
      } else {
        if (!(v > w.levels.beta)) return false;
      }
    }
  }
  return true;
}

std::optional<IndependenceWitness> is_boolean_independent(const FunctionClass& cls,
                                                          const std::vector<std::size_t>& subset,
                                                          const Levels& levels) {
  std::size_t k = subset.size();
  if (k == 0) throw std::invalid_argument("empty subfamily");
  if (k > kMaxPatternWidth) throw std::invalid_argument("subfamily exceeds pattern width cap");
  for (auto f : subset)
    if (f >= cls.n_functions()) throw std::invalid_argument("function index out of range");

  std::size_t cells = std::size_t{1} << k;
  constexpr std::size_t kMissing = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cell_points(cells, kMissing);
  std::size_t filled = 0;
  for (std::size_t x = 0; x < cls.domain_size() && filled < cells; ++x) {
    std::size_t mask = 0;
    bool in_some_cell = true;
    for (std::size_t j = 0; j < k; ++j) {
      const Rational& v = cls.value(subset[j], x);
      if (v < levels.alpha) {
        mask |= std::size_t{1} << j;
      } else if (!(v > levels.beta)) {
        in_some_cell = false;  // value inside [alpha, beta]
        break;
      }
    }
    if (in_some_cell && cell_points[mask] == kMissing) {
      cell_points[mask] = x;
      ++filled;
    }
  }
  if (filled < cells) return std::nullopt;
  return IndependenceWitness{subset, levels, std::move(cell_points)};
}

namespace {

void max_independent_dfs(const FunctionClass& cls, const Levels& levels, std::size_t cap,
                         std::vector<std::size_t>& prefix, std::size_t next,
                         MaxIndependentResult& best) {
  if (prefix.size() >= cap) return;
  for (std::size_t f = next; f < cls.n_functions(); ++f) {
    prefix.push_back(f);
    auto witness = is_boolean_independent(cls, prefix, levels);
    if (witness) {
      if (prefix.size() > best.size) {
        best.size = prefix.size();
        best.witness = std::move(witness);
      }
      max_independent_dfs(cls, levels, cap, prefix, f + 1, best);
    }
    prefix.pop_back();
  }
}

}  // namespace

MaxIndependentResult max_boolean_independent(const FunctionClass& cls, const Levels& levels,
                                             std::size_t cap) {
  if (cap > kMaxPatternWidth) throw std::invalid_argument("cap exceeds pattern width cap");
  MaxIndependentResult best;
  std::vector<std::size_t> prefix;
  max_independent_dfs(cls, levels, cap, prefix, 0, best);
  return best;
}

GrowResult grow_boolean_independent(const FunctionClass& cls, const Measure& mu,
                                    const PointSet& base, const Levels& levels,
                                    std::size_t depth) {
  if (depth > 20) throw std::invalid_argument("depth exceeds cap");
  if (base.size() != cls.domain_size()) throw std::invalid_argument("base size mismatch");
  if (mu.size() != cls.domain_size()) throw std::invalid_argument("measure size mismatch");
  if (!(mu.mass(base) > 0)) throw std::invalid_argument("base set has zero mass");

  std::vector<std::size_t> chosen;
  std::vector<PointSet> cells{base};
  while (chosen.size() < depth) {
    bool grown = false;
    for (std::size_t f = 0; f < cls.n_functions() && !grown; ++f) {
      PointSet below(cls.domain_size()), above(cls.domain_size());
      for (std::size_t x = 0; x < cls.domain_size(); ++x) {
        const Rational& v = cls.value(f, x);
        if (v < levels.alpha) below.set(x);
        else if (v > levels.beta) above.set(x);
      }
      bool splits_all = true;
      for (const auto& cell : cells) {
        if (!(mu.mass(cell & below) > 0) || !(mu.mass(cell & above) > 0)) {
          splits_all = false;
          break;
        }
      }
      if (!splits_all) continue;
      // New cell index is old_mask | (b << k) with b = 1 on the below side,
      // matching the witness bit convention.
      std::vector<PointSet> next;
      next.reserve(cells.size() * 2);
      for (std::size_t hi = 0; hi < 2; ++hi)
        for (const auto& cell : cells) next.push_back(cell & (hi ? below : above));
      cells = std::move(next);
      chosen.push_back(f);
      grown = true;
    }
    if (!grown) break;
  }

  GrowResult result;
  result.reached = chosen.size();
  if (chosen.size() == depth && depth > 0) {
    std::vector<std::size_t> cell_points(cells.size());
    for (std::size_t mask = 0; mask < cells.size(); ++mask) {
      std::size_t point = static_cast<std::size_t>(-1);
      cells[mask].for_each([&](std::size_t p) {
        if (point == static_cast<std::size_t>(-1) && mu.weight(p) > 0) point = p;
      });
      cell_points[mask] = point;
    }
    result.witness = IndependenceWitness{chosen, levels, std::move(cell_points)};
  }
  return result;
}

}  // namespace gcl
