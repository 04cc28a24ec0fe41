#pragma once

#include <string>
#include <vector>

#include "gcl/primes.hpp"
#include "gcl/rational.hpp"

namespace gcl {

/// Nonincreasing right-continuous step function on (0, 1/3) prescribing the
/// bracketing growth target n(eps).
class NSpec {
 public:
  /// n(eps) = ceil(1/eps).
  static NSpec ceil_inverse();
  static NSpec constant(long value);
  /// Breakpoints (eps_i, n_i): value n_i on [eps_i, eps_{i-1}); the list is
  /// given with eps strictly decreasing and n nondecreasing (checked).
  /// Below the last breakpoint the value stays at the last n_i.
  static NSpec table(std::vector<std::pair<Rational, long>> breakpoints);

  long value(const Rational& eps) const;
  const std::string& name() const { return name_; }

 private:
  enum class Kind { kCeilInverse, kConstant, kTable };
  Kind kind_ = Kind::kConstant;
  long constant_ = 0;
  std::vector<std::pair<Rational, long>> breakpoints_;
  std::string name_;
};

/// One dyadic band of the blow-up schedule: eps in (2/3 * 2^-(k+1),
/// 2/3 * 2^-k], block weight 2^-k, and the least admissible prime whose
/// plane size m = q^2+q+1 reaches the 3^(4 n* + 6) threshold.
struct ScheduleBand {
  int k = 0;
  long n_star = 0;
  BigInt threshold;  // 3^(4 n_star + 6)
  BigInt q;
  BigInt m;          // q^2 + q + 1
  Rational p;        // 2^-k
  PrimalityKind prime_certificate = PrimalityKind::kProvenSmall;
};

struct Schedule {
  std::vector<ScheduleBand> bands;

  /// Band index whose eps-interval contains eps, i.e. k = floor(log2(2/(3 eps))).
  /// Returns -1 when eps lies below every materialized band.
  int band_of(const Rational& eps) const;
};

/// Builds the schedule for bands k = 1..K. Per band, n* is the sup of the
/// spec over the band (its value at the left endpoint, by right
/// continuity); the prime search is exact big-integer arithmetic and q is
/// forced strictly increasing across bands.
Schedule choose_subsequence(const NSpec& n_spec, int bands);

}  // namespace gcl
