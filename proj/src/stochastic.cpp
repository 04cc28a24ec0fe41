#include "gcl/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "gcl/parallel.hpp"

namespace gcl {

namespace {

std::vector<Rational> cumulative_table(const Measure& mu) {
  std::vector<Rational> cum(mu.size());
  Rational running(0);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    running += mu.weight(i);
    cum[i] = running;
  }
  return cum;
}

std::size_t draw_index(const std::vector<Rational>& cum, const Rational& u) {
  // First index with cum[i] > u.
  std::size_t lo = 0, hi = cum.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (cum[mid] > u)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

}  // namespace

std::vector<std::size_t> sample_iid(const Measure& mu, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample size must be positive");
  if (mu.residual() != 0)
    throw std::invalid_argument("cannot sample a measure with residual mass");
  auto cum = cumulative_table(mu);
  SplitMix64 rng(seed);
  std::vector<std::size_t> sample;
  sample.reserve(n);
  for (std::size_t k = 0; k < n; ++k) sample.push_back(draw_index(cum, rng.unit_rational()));
  return sample;
}

Rational empirical_sup_deviation(const FunctionClass& cls, const Measure& mu,
                                 const std::vector<std::size_t>& sample) {
  if (sample.empty()) throw std::invalid_argument("empty sample");
  std::vector<std::size_t> counts(cls.domain_size(), 0);
  for (auto x : sample) counts.at(x) += 1;
  Rational n(static_cast<long>(sample.size()));
  Rational best(0);
  for (std::size_t f = 0; f < cls.n_functions(); ++f) {
    Rational empirical(0);
    for (std::size_t x = 0; x < cls.domain_size(); ++x)
      if (counts[x]) empirical += Rational(static_cast<long>(counts[x])) * cls.value(f, x);
    empirical /= n;
    Rational deviation = rational_abs(empirical - mu.integral(cls.row(f)));
    if (deviation > best) best = deviation;
  }
  return best;
}

Rational blum_dehardt_bound(const FunctionClass& cls, const CoverResult& brackets,
                            const Measure& mu, const std::vector<std::size_t>& sample) {
  if (brackets.brackets.empty()) throw std::invalid_argument("no brackets supplied");
  if (brackets.assignment.size() != cls.n_functions())
    throw std::invalid_argument("assignment does not cover the class");
  for (std::size_t f = 0; f < cls.n_functions(); ++f) {
    std::size_t b = brackets.assignment[f];
    if (b >= brackets.brackets.size())
      throw std::invalid_argument("function " + std::to_string(f) + " is uncovered");
    if (!brackets.brackets[b].contains_ae(cls.row(f), mu))
      throw std::invalid_argument("function " + std::to_string(f) +
                                  " escapes its assigned bracket");
  }

  std::vector<std::size_t> counts(cls.domain_size(), 0);
  for (auto x : sample) counts.at(x) += 1;
  Rational n(static_cast<long>(sample.size()));
  auto empirical_mean = [&](const std::vector<Rational>& values) {
    Rational s(0);
    for (std::size_t x = 0; x < values.size(); ++x)
      if (counts[x]) s += Rational(static_cast<long>(counts[x])) * values[x];
    return Rational(s / n);
  };

  Rational best;
  bool first = true;
  for (const auto& bracket : brackets.brackets) {
    Rational up_emp = empirical_mean(bracket.upper) - mu.integral(bracket.lower);
    Rational down = mu.integral(bracket.upper) - empirical_mean(bracket.lower);
    Rational larger = std::max(up_emp, down);
    if (first || larger > best) {
      best = larger;
      first = false;
    }
  }
  return best;
}

EmpiricalRun empirical_run(const FunctionClass& cls, const Measure& mu,
                           const std::vector<std::size_t>& sizes, std::uint64_t seed,
                           const CoverResult* brackets) {
  if (sizes.empty()) throw std::invalid_argument("no sample sizes requested");
  std::size_t longest = *std::max_element(sizes.begin(), sizes.end());
  EmpiricalRun run;
  run.seed = seed;
  run.sample_sizes = sizes;
  run.samples = sample_iid(mu, longest, seed);
  for (auto n : sizes) {
    std::vector<std::size_t> prefix(run.samples.begin(), run.samples.begin() + n);
    run.deviations.push_back(empirical_sup_deviation(cls, mu, prefix));
    if (brackets) run.envelopes.push_back(blum_dehardt_bound(cls, *brackets, mu, prefix));
  }
  return run;
}

std::vector<EmpiricalRun> empirical_runs(const FunctionClass& cls, const Measure& mu,
                                         const std::vector<std::size_t>& sizes,
                                         std::uint64_t base_seed, std::size_t n_seeds,
                                         const CoverResult* brackets, int threads) {
  std::vector<EmpiricalRun> runs(n_seeds);
  parallel_for(n_seeds, threads, [&](std::size_t i) {
    runs[i] = empirical_run(cls, mu, sizes, base_seed + i, brackets);
  });
  return runs;
}

Measure marczewski_measure(const FiniteDomain& domain,
                           const std::vector<std::pair<PointSet, PointSet>>& pairs,
                           const Rational& p) {
  std::size_t n = pairs.size();
  if (n == 0 || n > 20) throw std::invalid_argument("need between 1 and 20 pairs");
  if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0, 1]");
  for (std::size_t i = 0; i < n; ++i) {
    if (pairs[i].first.size() != domain.size || pairs[i].second.size() != domain.size)
      throw std::invalid_argument("set size mismatch");
    if (pairs[i].first.intersects(pairs[i].second))
      throw std::invalid_argument("pair " + std::to_string(i) + " overlaps");
  }

  std::vector<Rational> weights(domain.size, Rational(0));
  Rational q = 1 - p;
  for (std::size_t pattern = 0; pattern < (std::size_t{1} << n); ++pattern) {
    PointSet cell = (pattern & 1) ? pairs[0].first : pairs[0].second;
    for (std::size_t i = 1; i < n; ++i)
      cell &= (pattern >> i & 1) ? pairs[i].first : pairs[i].second;
    // The constructive section map: lowest-index point of the cell.
    std::size_t representative = domain.size;
    cell.for_each([&](std::size_t x) {
      if (representative == domain.size) representative = x;
    });
    if (representative == domain.size) {
      std::string bits(n, '0');
      for (std::size_t i = 0; i < n; ++i)
        if (pattern >> i & 1) bits[i] = '1';
      throw std::invalid_argument("empty cell for pattern " + bits);
    }
    std::size_t ones = static_cast<std::size_t>(__builtin_popcountll(pattern));
    weights[representative] +=
        rational_pow(p, static_cast<long>(ones)) * rational_pow(q, static_cast<long>(n - ones));
  }
  return Measure::exact(std::move(weights));
}

GcFailureReport gc_failure_demo(std::size_t d, std::size_t n, const Rational& p,
                                std::uint64_t base_seed, std::size_t n_seeds, int threads) {
  if (d < 1 || n < 1 || n_seeds < 1) throw std::invalid_argument("d, n, seeds must be positive");
  if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0, 1]");
  // Budget: d * n draws per seed.
  if (d * n > 100000000ull / std::max<std::size_t>(n_seeds, 1))
    throw std::invalid_argument("simulation budget exceeded");

  GcFailureReport report;
  report.d = d;
  report.n = n;
  report.p = p;
  report.n_seeds = n_seeds;
  report.event.assign(n_seeds, false);
  report.deviations.assign(n_seeds, Rational(0));

  // Exact Bernoulli(p): draw < p * 2^64 compared in integers.
  BigInt threshold_num = p.get_num() * bigint_pow(2, 64);
  BigInt den = p.get_den();

  std::vector<std::uint8_t> events(n_seeds, 0);
  std::vector<Rational> deviations(n_seeds, Rational(0));
  parallel_for(n_seeds, threads, [&](std::size_t s) {
    SplitMix64 rng(base_seed + s);
    std::vector<std::size_t> ones(d, 0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < d; ++j) {
        BigInt draw(static_cast<unsigned long>(rng.next()));
        if (draw * den < threshold_num) ++ones[j];
      }
    bool hit = false;
    std::size_t max_ones = 0, min_ones = n;
    for (std::size_t j = 0; j < d; ++j) {
      if (ones[j] == n) hit = true;
      max_ones = std::max(max_ones, ones[j]);
      min_ones = std::min(min_ones, ones[j]);
    }
    Rational nn(static_cast<long>(n));
    Rational high = rational_abs(Rational(static_cast<long>(max_ones)) / nn - p);
    Rational low = rational_abs(Rational(static_cast<long>(min_ones)) / nn - p);
    deviations[s] = std::max(high, low);
    events[s] = hit ? 1 : 0;
  });

  std::size_t hits = 0;
  for (std::size_t s = 0; s < n_seeds; ++s) {
    report.event[s] = events[s] != 0;
    report.deviations[s] = deviations[s];
    if (events[s]) ++hits;
  }
  report.event_frequency = static_cast<double>(hits) / static_cast<double>(n_seeds);
  double pd = p.get_d();
  report.analytic_probability =
      1.0 - std::pow(1.0 - std::pow(pd, static_cast<double>(n)), static_cast<double>(d));
  return report;
}

StationaryDemo stationary_demo(const std::vector<std::vector<Rational>>& kernel,
                               const Measure& pi0, const FunctionClass& cls,
                               const std::vector<std::size_t>& sizes, std::uint64_t seed) {
  std::size_t states = kernel.size();
  if (states == 0 || pi0.size() != states || cls.domain_size() != states)
    throw std::invalid_argument("kernel/measure/class size mismatch");
  if (pi0.residual() != 0) throw std::invalid_argument("stationary law must have full mass");
  for (const auto& row : kernel) {
    if (row.size() != states) throw std::invalid_argument("kernel must be square");
    Rational sum(0);
    for (const auto& entry : row) {
      if (entry < 0) throw std::invalid_argument("negative kernel entry");
      sum += entry;
    }
    if (sum != 1) throw std::invalid_argument("kernel rows must sum to 1");
  }
  // Exact stationarity: pi0 K = pi0.
  for (std::size_t j = 0; j < states; ++j) {
    Rational mass(0);
    for (std::size_t i = 0; i < states; ++i) mass += pi0.weight(i) * kernel[i][j];
    if (mass != pi0.weight(j)) throw std::invalid_argument("pi0 is not stationary for the kernel");
  }
  // Irreducibility: strong connectivity of the positive-entry digraph.
  auto reaches_all = [&](bool transpose) {
    std::vector<bool> seen(states, false);
    std::queue<std::size_t> frontier;
    frontier.push(0);
    seen[0] = true;
    while (!frontier.empty()) {
      std::size_t i = frontier.front();
      frontier.pop();
      for (std::size_t j = 0; j < states; ++j) {
        const Rational& w = transpose ? kernel[j][i] : kernel[i][j];
        if (w > 0 && !seen[j]) {
          seen[j] = true;
          frontier.push(j);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  if (!reaches_all(false) || !reaches_all(true))
    throw std::invalid_argument("kernel is reducible; only the ergodic case is supported");

  StationaryDemo demo;
  demo.iid_kernel = true;
  for (std::size_t i = 0; i < states && demo.iid_kernel; ++i)
    for (std::size_t j = 0; j < states; ++j)
      if (kernel[i][j] != pi0.weight(j)) {
        demo.iid_kernel = false;
        break;
      }

  std::size_t longest = *std::max_element(sizes.begin(), sizes.end());
  SplitMix64 rng(seed);
  auto pi0_cum = cumulative_table(pi0);
  std::vector<std::vector<Rational>> row_cum(states);
  for (std::size_t i = 0; i < states; ++i) {
    Rational running(0);
    row_cum[i].resize(states);
    for (std::size_t j = 0; j < states; ++j) {
      running += kernel[i][j];
      row_cum[i][j] = running;
    }
  }
  std::vector<std::size_t> path;
  path.reserve(longest);
  std::size_t state = draw_index(pi0_cum, rng.unit_rational());
  path.push_back(state);
  for (std::size_t k = 1; k < longest; ++k) {
    state = draw_index(row_cum[state], rng.unit_rational());
    path.push_back(state);
  }

  demo.run.seed = seed;
  demo.run.sample_sizes = sizes;
  demo.run.samples = path;
  for (auto n : sizes) {
    std::vector<std::size_t> prefix(path.begin(), path.begin() + n);
    demo.run.deviations.push_back(empirical_sup_deviation(cls, pi0, prefix));
  }
  return demo;
}

}  // namespace gcl
