#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "liftexp/errors.hpp"

namespace liftexp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Arbitrary-precision integers back every value that can outgrow a machine
// word (a^n - 1, residues mod p^k for large k). Word-size fast paths are
// used where profitable and are not observable in results.
using Integer = mpz_class;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 powmod_u64(u64 base, u64 exp, u64 mod) {
  u64 r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return r;
}

inline bool fits_u64(const Integer& x) { return mpz_fits_ulong_p(x.get_mpz_t()) != 0 && x >= 0; }

inline u64 to_u64(const Integer& x) { return mpz_get_ui(x.get_mpz_t()); }

// nonnegative remainder of x mod m, also for negative x
inline u64 mod_u64(const Integer& x, u64 m) { return mpz_fdiv_ui(x.get_mpz_t(), m); }

inline Integer pow_int(const Integer& base, u64 exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Integer pow_u64(u64 base, u64 exp) { return pow_int(Integer(static_cast<unsigned long>(base)), exp); }

inline int bit_length(const Integer& x) {
  return x == 0 ? 0 : static_cast<int>(mpz_sizeinbase(x.get_mpz_t(), 2));
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline Integer integer_from_string(const std::string& s) {
  try {
    return Integer(s);
  } catch (const std::invalid_argument&) {
    throw input_error("not an integer: '" + s + "'");
  }
}

} // namespace liftexp
