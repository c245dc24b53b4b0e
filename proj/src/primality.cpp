#include "liftexp/primality.hpp"

namespace liftexp {

namespace {

bool strong_probable_prime(u64 n, u64 a) {
  a %= n;
  if (a == 0) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

} // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

bool is_prime(const Integer& x) {
  if (x < 2) return false;
  if (fits_u64(x)) return is_prime_u64(to_u64(x));
  return mpz_probab_prime_p(x.get_mpz_t(), 40) > 0;
}

} // namespace liftexp
