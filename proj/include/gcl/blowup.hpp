#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcl/rational.hpp"
#include "gcl/schedule.hpp"

namespace gcl {

/// floor((1/4) * log3(y)) for a positive rational y, computed exactly.
/// Exact powers of three are resolved symbolically; otherwise log3(y) is
/// irrational and an interval evaluation with directed rounding is widened
/// until the floor is unambiguous.
long floor_quarter_log3(const Rational& y);

struct LowerBoundResult {
  /// max(0, raw) -- the reported bound.
  long bound = 0;
  /// Supremum over scheduled blocks with p_j > eps; absent when every
  /// scheduled weight is <= eps (all terms are -infinity).
  std::optional<long> raw;
  /// Band index attaining the supremum.
  std::optional<int> argmax_band;
};

/// Bracketing lower bound at eps in (0, 1/3):
/// sup over scheduled j of floor( (1/4) log3 m_j + (1/2) log3 (1 - eps/p_j) ),
/// i.e. floor((1/4) log3( m_j (1 - eps/p_j)^2 )) per block.
LowerBoundResult bracketing_lower_bound(const Schedule& schedule, const Rational& eps);

struct BlowupRow {
  Rational eps;
  long target = 0;  // n_spec(eps)
  long bound = 0;
  long margin = 0;  // bound - target
  bool pass = false;
};

struct BlowupReport {
  Schedule schedule;
  std::vector<BlowupRow> rows;
  bool all_pass = false;
};

/// Builds the schedule for every band touched by the grid and checks
/// bracketing_lower_bound(eps) >= n_spec(eps) at each grid point.
BlowupReport verify_blowup(const NSpec& n_spec, const std::vector<Rational>& grid);

/// CSV rows (eps, n_spec, bound, margin) with a header line.
std::string blowup_csv(const BlowupReport& report);

}  // namespace gcl
