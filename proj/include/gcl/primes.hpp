#pragma once

#include "gcl/rational.hpp"

namespace gcl {

enum class PrimalityKind {
  kProvenSmall,       // trial division or deterministic Miller-Rabin range
  kProbableBpsw,      // GMP probable-prime test plus fixed extra rounds
};

struct PrimalityResult {
  bool is_prime = false;
  PrimalityKind kind = PrimalityKind::kProvenSmall;
};

/// Primality test: deterministic Miller-Rabin with the 13-witness set
/// (proven for n < 3.317e24); larger inputs fall back to the BPSW-style
/// probable-prime test with fixed extra bases, and the certificate kind
/// says so.
PrimalityResult test_prime(const BigInt& n);

/// Least (probable) prime >= n; the certificate kind of the result applies.
struct NextPrimeResult {
  BigInt prime;
  PrimalityKind kind;
};
NextPrimeResult next_prime_geq(const BigInt& n);

/// Integer square root (floor).
BigInt isqrt(const BigInt& n);

}  // namespace gcl
