#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gcl/covers.hpp"
#include "gcl/domain.hpp"
#include "gcl/function_class.hpp"
#include "gcl/measure.hpp"
#include "gcl/rng.hpp"

namespace gcl {

/// Inverse-CDF sampling over the exact cumulative weight table; draws are
/// compared exactly against the table, so runs are bit-identical across
/// platforms for a given seed. Requires a fully materialized measure
/// (residual 0).
std::vector<std::size_t> sample_iid(const Measure& mu, std::size_t n, std::uint64_t seed);

/// sup over the class of |empirical mean - mu(f)|, exact.
Rational empirical_sup_deviation(const FunctionClass& cls, const Measure& mu,
                                 const std::vector<std::size_t>& sample);

/// One reproducible simulation: deviations (and optional bracket envelopes)
/// at each requested sample size, from a single stream.
struct EmpiricalRun {
  std::uint64_t seed = 0;
  std::vector<std::size_t> sample_sizes;
  std::vector<std::size_t> samples;  // the longest prefix drawn
  std::vector<Rational> deviations;  // one per requested size
  std::vector<Rational> envelopes;   // empty unless brackets were supplied
};

/// Runs the i.i.d. pipeline at each size in `sizes` (deviations computed on
/// prefixes of one stream). When `brackets` is given, also evaluates the
/// two-sided bracket envelope per size.
EmpiricalRun empirical_run(const FunctionClass& cls, const Measure& mu,
                           const std::vector<std::size_t>& sizes, std::uint64_t seed,
                           const CoverResult* brackets = nullptr);

/// Independent seeds run in parallel; results are ordered by seed index.
std::vector<EmpiricalRun> empirical_runs(const FunctionClass& cls, const Measure& mu,
                                         const std::vector<std::size_t>& sizes,
                                         std::uint64_t base_seed, std::size_t n_seeds,
                                         const CoverResult* brackets = nullptr, int threads = 1);

/// Two-sided bracket bound on the empirical sup-deviation:
/// max_i {mu_n(u_i) - mu(l_i)} v max_i {mu(u_i) - mu_n(l_i)} over the
/// brackets [l_i, u_i] of a total assignment. Always >= the sup-deviation
/// for the same sample.
Rational blum_dehardt_bound(const FunctionClass& cls, const CoverResult& brackets,
                            const Measure& mu, const std::vector<std::size_t>& sample);

/// Measure making the pairs (A_i, B_i) into exactly independent events of
/// probability p: mass p^|w| (1-p)^(n-|w|) on the lowest-index point of each
/// of the 2^n cells. Requires disjoint pairs and nonempty cells (checked,
/// offending pattern reported); n <= 20.
Measure marczewski_measure(const FiniteDomain& domain,
                           const std::vector<std::pair<PointSet, PointSet>>& pairs,
                           const Rational& p);

struct GcFailureReport {
  std::size_t d = 0;
  std::size_t n = 0;
  Rational p;
  std::size_t n_seeds = 0;
  std::vector<bool> event;          // some coordinate all-ones, per seed
  std::vector<Rational> deviations;  // sup-deviation of the d indicators, per seed
  double event_frequency = 0;
  double analytic_probability = 0;  // 1 - (1 - p^n)^d
};

/// Growing-family failure demonstration: n draws of d independent
/// Bernoulli(p) coordinates (the 2^d domain is never materialized); the
/// class is the d coordinate indicators. When some coordinate is 1 on every
/// draw the empirical sup-deviation is pinned at 1-p v p.
GcFailureReport gc_failure_demo(std::size_t d, std::size_t n, const Rational& p,
                                std::uint64_t base_seed, std::size_t n_seeds, int threads = 1);

struct StationaryDemo {
  EmpiricalRun run;
  bool iid_kernel = false;  // every row equals the stationary law
};

/// Simulates an irreducible row-stochastic chain started from its exact
/// stationary law and reports sup over the class of |time average - pi0(f)|.
/// Reducible kernels and non-stationary pi0 are rejected.
StationaryDemo stationary_demo(const std::vector<std::vector<Rational>>& kernel,
                               const Measure& pi0, const FunctionClass& cls,
                               const std::vector<std::size_t>& sizes, std::uint64_t seed);

}  // namespace gcl
