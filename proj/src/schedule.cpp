#include "gcl/schedule.hpp"

#include <stdexcept>

namespace gcl {

NSpec NSpec::ceil_inverse() {
  NSpec s;
  s.kind_ = Kind::kCeilInverse;
  s.name_ = "ceil-inv";
  return s;
}

NSpec NSpec::constant(long value) {
  if (value < 0) throw std::invalid_argument("negative target");
  NSpec s;
  s.kind_ = Kind::kConstant;
  s.constant_ = value;
  s.name_ = "const:" + std::to_string(value);
  return s;
}

NSpec NSpec::table(std::vector<std::pair<Rational, long>> breakpoints) {
  if (breakpoints.empty()) throw std::invalid_argument("empty table");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i].first < breakpoints[i - 1].first))
      throw std::invalid_argument("breakpoints must have strictly decreasing eps");
    if (breakpoints[i].second < breakpoints[i - 1].second)
      throw std::invalid_argument("spec must be nonincreasing in eps");
  }
  NSpec s;
  s.kind_ = Kind::kTable;
  s.breakpoints_ = std::move(breakpoints);
  s.name_ = "table";
  return s;
}

long NSpec::value(const Rational& eps) const {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  switch (kind_) {
    case Kind::kCeilInverse:
      return static_cast<long>(rational_ceil(Rational(1) / eps).get_si());
    case Kind::kConstant:
      return constant_;
    case Kind::kTable: {
      // Right-continuous: value at the largest breakpoint eps_i <= eps.
      long out = breakpoints_.back().second;
      for (const auto& [threshold, v] : breakpoints_) {
        if (eps >= threshold) {
          out = v;
          break;
        }
      }
      return out;
    }
  }
  return 0;
}

int Schedule::band_of(const Rational& eps) const {
  for (const auto& band : bands) {
    Rational right = Rational(2, 3) * rational_pow(Rational(1, 2), band.k);
    Rational left = right / 2;
    if (eps > left && eps <= right) return band.k - 1;
  }
  return -1;
}

Schedule choose_subsequence(const NSpec& n_spec, int bands) {
  if (bands < 1) throw std::invalid_argument("at least one band required");
  Schedule schedule;
  BigInt previous_q(1);
  for (int k = 1; k <= bands; ++k) {
    ScheduleBand band;
    band.k = k;
    // Left endpoint of the band: 2/3 * 2^-(k+1) = 1/(3 * 2^k).
    Rational left(BigInt(1), BigInt(3 * bigint_pow(2, static_cast<unsigned long>(k))));
    left.canonicalize();
    band.n_star = n_spec.value(left);
    band.threshold = bigint_pow(3, static_cast<unsigned long>(4 * band.n_star + 6));

    // Least integer with q^2 + q + 1 >= threshold, then the next prime at or
    // above it; q is also forced strictly increasing across bands.
    BigInt start = isqrt(band.threshold);
    while (start > 0 && start * start + start + 1 >= band.threshold) --start;
    while (start * start + start + 1 < band.threshold) ++start;
    if (start <= previous_q) start = previous_q + 1;
    NextPrimeResult candidate = next_prime_geq(start);
    band.q = candidate.prime;
    band.m = band.q * band.q + band.q + 1;
    band.p = Rational(BigInt(1), bigint_pow(2, static_cast<unsigned long>(k)));
    band.p.canonicalize();
    band.prime_certificate = candidate.kind;
    previous_q = band.q;
    schedule.bands.push_back(std::move(band));
  }
  return schedule;
}

}  // namespace gcl
