#include "gcl/primes.hpp"

#include <stdexcept>

namespace gcl {

namespace {

// Strong-probable-prime test to base a; n odd, n > 3.
bool strong_probable_prime(const BigInt& n, unsigned long a) {
  BigInt n_minus_1 = n - 1;
  unsigned long s = mpz_scan1(n_minus_1.get_mpz_t(), 0);
  BigInt d = n_minus_1 >> s;
  BigInt base(static_cast<unsigned long>(a));
  BigInt x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

// Sorensen & Webster: these 13 witnesses decide primality below
// 3317044064679887385961981.
constexpr unsigned long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

BigInt deterministic_bound() {
  static const BigInt bound("3317044064679887385961981");
  return bound;
}

}  // namespace

PrimalityResult test_prime(const BigInt& n) {
  if (n < 2) return {false, PrimalityKind::kProvenSmall};
  for (unsigned long p : kWitnesses) {
    if (n == p) return {true, PrimalityKind::kProvenSmall};
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return {false, PrimalityKind::kProvenSmall};
  }
  if (n < deterministic_bound()) {
    for (unsigned long a : kWitnesses)
      if (!strong_probable_prime(n, a)) return {false, PrimalityKind::kProvenSmall};
    return {true, PrimalityKind::kProvenSmall};
  }
  // Large range: GMP's probable-prime test (trial division + MR rounds)
  // plus the fixed witness set again. Composites are certain; primes are
  // probable and flagged as such.
  int gmp_verdict = mpz_probab_prime_p(n.get_mpz_t(), 40);
  if (gmp_verdict == 0) return {false, PrimalityKind::kProbableBpsw};
  if (gmp_verdict == 2) return {true, PrimalityKind::kProvenSmall};
  for (unsigned long a : kWitnesses)
    if (!strong_probable_prime(n, a)) return {false, PrimalityKind::kProbableBpsw};
  return {true, PrimalityKind::kProbableBpsw};
}

NextPrimeResult next_prime_geq(const BigInt& n) {
  BigInt candidate = n < 2 ? BigInt(2) : n;
  if (candidate > 2 && mpz_even_p(candidate.get_mpz_t())) candidate += 1;
  while (true) {
    PrimalityResult r = test_prime(candidate);
    if (r.is_prime) return {candidate, r.kind};
    candidate += candidate == 2 ? 1 : 2;
  }
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace gcl
