#include "liftexp/arith.hpp"

#include "liftexp/errors.hpp"
#include "liftexp/factor.hpp"
#include "liftexp/primality.hpp"

namespace liftexp {

int vp(const Integer& x, const Integer& p) {
  if (x == 0) throw undefined_valuation_error("vp(0, p) is undefined");
  if (p < 2) throw input_error("vp requires p >= 2");
  Integer ax = abs(x), reduced;
  return static_cast<int>(mpz_remove(reduced.get_mpz_t(), ax.get_mpz_t(), p.get_mpz_t()));
}

int vp_u64(u64 x, u64 p) {
  if (x == 0) throw undefined_valuation_error("vp(0, p) is undefined");
  if (p < 2) throw input_error("vp requires p >= 2");
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

long vp_rational(const Integer& num, const Integer& den, const Integer& p) {
  if (num == 0 || den == 0) throw undefined_valuation_error("vp of 0/x or x/0 is undefined");
  return static_cast<long>(vp(num, p)) - vp(den, p);
}

Integer modpow(const Integer& base, const Integer& exponent, const Integer& modulus) {
  if (modulus < 2) throw input_error("modpow requires modulus >= 2");
  if (exponent < 0) throw input_error("modpow requires exponent >= 0");
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

OrderResult multiplicative_order(const Integer& a, u64 p) {
  if (!is_prime_u64(p)) throw input_error("multiplicative_order requires p prime");
  const u64 r = mod_u64(a, p);
  if (r == 0) throw base_divisible_error("multiplicative_order requires p not dividing a");
  u64 d = p - 1;
  for (auto [q, e] : factor_u64(p - 1)) {
    for (int i = 0; i < e; ++i) {
      if (d % q == 0 && powmod_u64(r, d / q, p) == 1) d /= q;
    }
    (void)e;
  }
  return OrderResult{a, p, d};
}

OrderValue power_diff_valuation(const Integer& a, const Integer& b, const Integer& e,
                                const Integer& p, int cap) {
  if (cap < 1) throw input_error("power_diff_valuation requires cap >= 1");
  if (e < 1) throw input_error("power_diff_valuation requires exponent >= 1");
  if (!is_prime(p)) throw input_error("power_diff_valuation requires p prime");
  if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()) || mpz_divisible_p(b.get_mpz_t(), p.get_mpz_t()))
    throw base_divisible_error("power_diff_valuation requires p coprime to ab");

  // word-size fast path: the largest p^k <= 2^64-1 with k <= cap
  if (fits_u64(p)) {
    const u64 pu = to_u64(p);
    int efit = 1;
    u64 m = pu;
    while (efit < cap && m <= UINT64_MAX / pu) {
      m *= pu;
      ++efit;
    }
    u64 ra, rb;
    if (fits_u64(e)) {
      ra = powmod_u64(mod_u64(a, m), to_u64(e), m);
      rb = powmod_u64(mod_u64(b, m), to_u64(e), m);
    } else {
      ra = to_u64(modpow(a, e, Integer(static_cast<unsigned long>(m))));
      rb = to_u64(modpow(b, e, Integer(static_cast<unsigned long>(m))));
    }
    const u64 diff = ra >= rb ? ra - rb : m - (rb - ra);
    if (diff != 0) return OrderValue{vp_u64(diff, pu), false}; // exact: diff < p^efit
    if (efit >= cap) return OrderValue{cap, true};
    // saturated the word-size modulus; escalate to p^cap below
  }

  const Integer m = pow_int(p, static_cast<u64>(cap));
  Integer diff = (modpow(a, e, m) - modpow(b, e, m)) % m;
  if (diff < 0) diff += m;
  if (diff == 0) return OrderValue{cap, true};
  return OrderValue{vp(diff, p), false};
}

} // namespace liftexp
