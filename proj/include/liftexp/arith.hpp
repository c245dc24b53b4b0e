#pragma once

#include "liftexp/integer.hpp"

namespace liftexp {

// Largest e with p^e | x; the sign of x is ignored. x = 0 is rejected.
int vp(const Integer& x, const Integer& p);
int vp_u64(u64 x, u64 p);

// vp(num) - vp(den); may be negative.
long vp_rational(const Integer& num, const Integer& den, const Integer& p);

// base^exponent mod modulus for modulus >= 2 and exponent >= 0; transparently
// arbitrary-precision, result in [0, modulus).
Integer modpow(const Integer& base, const Integer& exponent, const Integer& modulus);

struct OrderResult {
  Integer base;
  u64 p;
  u64 d; // multiplicative order of base mod p; divides p - 1
};

// Least d >= 1 with a^d = 1 mod p, by factoring p - 1 and stripping primes.
OrderResult multiplicative_order(const Integer& a, u64 p);

// A valuation that may have saturated at the configured cap.
struct OrderValue {
  int value = 0;
  bool at_least = false; // true -> the true valuation is >= value (== cap)
};

// nu_p(a^e - b^e) for p coprime to ab, via residues mod ascending powers of p,
// never materializing a^e. Exact when < cap, sentinel when >= cap. This is the
// Fermat-quotient kernel the scanning modules are built on.
OrderValue power_diff_valuation(const Integer& a, const Integer& b, const Integer& e,
                                const Integer& p, int cap);

} // namespace liftexp
