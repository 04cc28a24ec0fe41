#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gcl/function_class.hpp"
#include "gcl/levels.hpp"

namespace gcl {

/// Certificate that a subfamily is Boolean independent at given levels.
///
/// Patterns over the k listed functions are bitmasks: bit j set means the
/// witness point of that cell has f_j < alpha, clear means f_j > beta.
/// cell_points[mask] is the witness point for each of the 2^k patterns.
struct IndependenceWitness {
  std::vector<std::size_t> function_indices;
  Levels levels;
  std::vector<std::size_t> cell_points;
};

bool verify(const IndependenceWitness& w, const FunctionClass& cls);

/// Certificate that a point set is gamma-shattered. selector[mask] is a
/// function index with f(x_j) < alpha for j in the mask and f(x_j) > beta
/// for j outside it.
struct ShatterWitness {
  std::vector<std::size_t> points;
  Levels levels;
  std::vector<std::size_t> selector;
};

bool verify(const ShatterWitness& w, const FunctionClass& cls);

}  // namespace gcl
