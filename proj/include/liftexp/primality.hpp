#pragma once

#include "liftexp/integer.hpp"

namespace liftexp {

// Deterministic Miller-Rabin for the full 64-bit range (fixed base set
// 2..37, sufficient for all n < 3.3e24).
bool is_prime_u64(u64 n);

// Deterministic below 2^64; above that a strong probable-prime test
// (GMP's BPSW plus 40 Miller-Rabin rounds). Negative inputs are not prime.
bool is_prime(const Integer& x);

} // namespace liftexp
