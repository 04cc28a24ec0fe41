#include "gcl/blowup.hpp"

#include <mpfr.h>

#include <sstream>
#include <stdexcept>

namespace gcl {

namespace {

// Directed-rounding interval for log3(y) at the given precision.
// Soundness comes from MPFR's correctly rounded log and set_q.
void log3_interval(const Rational& y, mpfr_prec_t prec, mpfr_t lo, mpfr_t hi) {
  mpfr_t ylo, yhi, ln3lo, ln3hi;
  mpfr_inits2(prec, ylo, yhi, ln3lo, ln3hi, nullptr);
  mpfr_set_q(ylo, y.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(yhi, y.get_mpq_t(), MPFR_RNDU);
  mpfr_log(ylo, ylo, MPFR_RNDD);  // lower bound of ln y
  mpfr_log(yhi, yhi, MPFR_RNDU);  // upper bound of ln y
  mpfr_set_ui(ln3lo, 3, MPFR_RNDN);
  mpfr_log(ln3hi, ln3lo, MPFR_RNDU);
  mpfr_log(ln3lo, ln3lo, MPFR_RNDD);
  // ln y / ln 3 with outward rounding; ln 3 > 0, sign of ln y may vary.
  if (mpfr_sgn(ylo) >= 0) {
    mpfr_div(lo, ylo, ln3hi, MPFR_RNDD);
  } else {
    mpfr_div(lo, ylo, ln3lo, MPFR_RNDD);
  }
  if (mpfr_sgn(yhi) >= 0) {
    mpfr_div(hi, yhi, ln3lo, MPFR_RNDU);
  } else {
    mpfr_div(hi, yhi, ln3hi, MPFR_RNDU);
  }
  mpfr_clears(ylo, yhi, ln3lo, ln3hi, nullptr);
}

}  // namespace

long floor_quarter_log3(const Rational& y) {
  if (y <= 0) throw std::invalid_argument("log of a nonpositive value");
  long t = 0;
  if (is_power_of_three(y, t)) {
    // Exact: floor(t/4).
    return static_cast<long>(rational_floor(Rational(t, 4)).get_si());
  }
  // log3(y) is irrational here, so the floor is eventually unambiguous.
  for (mpfr_prec_t prec = 128; prec <= (mpfr_prec_t{1} << 24); prec *= 2) {
    mpfr_t lo, hi, tmp;
    mpfr_inits2(prec, lo, hi, tmp, nullptr);
    log3_interval(y, prec, lo, hi);
    mpfr_div_ui(lo, lo, 4, MPFR_RNDD);
    mpfr_div_ui(hi, hi, 4, MPFR_RNDU);
    mpfr_floor(tmp, lo);
    long floor_lo = mpfr_get_si(tmp, MPFR_RNDN);
    mpfr_floor(tmp, hi);
    long floor_hi = mpfr_get_si(tmp, MPFR_RNDN);
    mpfr_clears(lo, hi, tmp, nullptr);
    if (floor_lo == floor_hi) return floor_lo;
  }
  throw std::runtime_error("log3 interval failed to resolve the floor");
}

LowerBoundResult bracketing_lower_bound(const Schedule& schedule, const Rational& eps) {
  if (!(eps > 0) || !(eps < Rational(1, 3)))
    throw std::invalid_argument("eps must lie in (0, 1/3)");
  LowerBoundResult result;
  for (const auto& band : schedule.bands) {
    if (!(band.p > eps)) continue;  // 1 - eps/p <= 0: term is -infinity
    Rational s = 1 - eps / band.p;
    Rational y = Rational(band.m) * s * s;
    long term = floor_quarter_log3(y);
    if (!result.raw || term > *result.raw) {
      result.raw = term;
      result.argmax_band = band.k;
    }
  }
  result.bound = result.raw && *result.raw > 0 ? *result.raw : 0;
  return result;
}

BlowupReport verify_blowup(const NSpec& n_spec, const std::vector<Rational>& grid) {
  if (grid.empty()) throw std::invalid_argument("empty grid");
  int max_band = 1;
  for (const auto& eps : grid) {
    if (!(eps > 0) || !(eps < Rational(1, 3)))
      throw std::invalid_argument("grid point outside (0, 1/3)");
    // k = floor(log2(2 / (3 eps))).
    int k = 0;
    Rational bound(2, 3);
    while (bound / 2 >= eps) {
      bound /= 2;
      ++k;
    }
    max_band = std::max(max_band, k);
  }

  BlowupReport report;
  report.schedule = choose_subsequence(n_spec, max_band);
  report.all_pass = true;
  for (const auto& eps : grid) {
    BlowupRow row;
    row.eps = eps;
    row.target = n_spec.value(eps);
    row.bound = bracketing_lower_bound(report.schedule, eps).bound;
    row.margin = row.bound - row.target;
    row.pass = row.bound >= row.target;
    if (!row.pass) report.all_pass = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string blowup_csv(const BlowupReport& report) {
  std::ostringstream out;
  out << "eps,n_spec,bound,margin\n";
  for (const auto& row : report.rows)
    out << rational_string(row.eps) << "," << row.target << "," << row.bound << "," << row.margin
        << "\n";
  return out.str();
}

}  // namespace gcl
