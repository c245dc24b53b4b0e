#include "liftexp/factor.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>

#include "liftexp/errors.hpp"
#include "liftexp/primality.hpp"
#include "liftexp/sieve.hpp"

namespace liftexp {

namespace {

const std::vector<u64>& trial_primes(u64 limit) {
  static std::mutex mu;
  static std::map<u64, std::unique_ptr<std::vector<u64>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& entry = cache[limit];
  if (!entry) entry = std::make_unique<std::vector<u64>>(primes_upto(limit));
  return *entry;
}

u64 pollard_brent_u64(u64 n) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ n); // deterministic per n
  while (true) {
    u64 y = rng() % n;
    u64 c = rng() % (n - 1) + 1;
    const u64 m = 128;
    u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        const u64 span = std::min(m, r - k);
        for (u64 i = 0; i < span; ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r <<= 1;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (mulmod(ys, ys, n) + c) % n;
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
}

void factor_u64_into(u64 n, std::map<u64, int>& out) {
  while (n > 1) {
    if (is_prime_u64(n)) {
      ++out[n];
      return;
    }
    u64 f = pollard_brent_u64(n);
    factor_u64_into(f, out);
    n /= f;
  }
}

// Brent's rho on arbitrary precision, charging every f-evaluation against
// iters_left. Returns a nontrivial factor, or 0 when the budget ran out.
Integer pollard_brent_mpz(const Integer& n, u64& iters_left) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, q = 1, x, ys, g = 1, diff;
    u64 r = 1;
    const u64 m = 128;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) {
        if (iters_left == 0) return 0;
        --iters_left;
        y = (y * y + c) % n;
      }
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        const u64 span = std::min(m, r - k);
        for (u64 i = 0; i < span; ++i) {
          if (iters_left == 0) return 0;
          --iters_left;
          y = (y * y + c) % n;
          diff = x - y;
          q = (q * abs(diff)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      r <<= 1;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        if (iters_left == 0) return 0;
        --iters_left;
        ys = (ys * ys + c) % n;
        diff = x - ys;
        diff = abs(diff);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g != n) return g;
    // cycle collapsed for this c; retry with the next polynomial
  }
}

// Factor value into acc, charging rho work to iters_left; returns the
// unfactored composite remainder (1 when complete).
Integer factor_into(std::map<Integer, int>& acc, Integer value, const std::vector<u64>& trial,
                    u64& iters_left) {
  Integer cofactor = 1;
  if (value <= 1) return cofactor;

  for (u64 p : trial) {
    if (mpz_fdiv_ui(value.get_mpz_t(), p) == 0) {
      int e = static_cast<int>(mpz_remove(value.get_mpz_t(), value.get_mpz_t(), Integer(static_cast<unsigned long>(p)).get_mpz_t()));
      acc[Integer(static_cast<unsigned long>(p))] += e;
    }
    if (Integer(static_cast<unsigned long>(p)) * p > value) break;
  }
  if (value == 1) return cofactor;

  std::vector<std::pair<Integer, int>> stack;
  stack.emplace_back(value, 1);
  while (!stack.empty()) {
    auto [c, mult] = stack.back();
    stack.pop_back();
    if (c == 1) continue;
    if (fits_u64(c)) {
      std::map<u64, int> small;
      factor_u64_into(to_u64(c), small);
      for (auto [p, e] : small) acc[Integer(static_cast<unsigned long>(p))] += e * mult;
      continue;
    }
    if (is_prime(c)) {
      acc[c] += mult;
      continue;
    }
    if (mpz_perfect_power_p(c.get_mpz_t())) {
      // find the largest k with c = root^k, then factor root once
      for (int k = bit_length(c); k >= 2; --k) {
        Integer root;
        if (mpz_root(root.get_mpz_t(), c.get_mpz_t(), k) != 0) {
          stack.emplace_back(root, mult * k);
          break;
        }
      }
      continue;
    }
    Integer f = pollard_brent_mpz(c, iters_left);
    if (f == 0) {
      cofactor *= pow_int(c, mult);
      continue;
    }
    stack.emplace_back(f, mult);
    stack.emplace_back(c / f, mult);
  }
  return cofactor;
}

PartialFactorization finish(std::map<Integer, int>& acc, const Integer& cofactor) {
  PartialFactorization out;
  out.factors.assign(acc.begin(), acc.end());
  out.cofactor = cofactor;
  return out;
}

int moebius(u64 m) {
  int mu = 1;
  for (auto [p, e] : factor_u64(m)) {
    if (e >= 2) return 0;
    mu = -mu;
    (void)p;
  }
  return mu;
}

} // namespace

std::vector<std::pair<u64, int>> factor_u64(u64 n) {
  if (n < 1) throw input_error("factor_u64 requires n >= 1");
  std::map<u64, int> acc;
  u64 rem = n;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    while (rem % p == 0) {
      rem /= p;
      ++acc[p];
    }
  }
  factor_u64_into(rem, acc);
  return {acc.begin(), acc.end()};
}

PartialFactorization factor_integer(const Integer& n, const Budget& budget) {
  if (n < 1) throw input_error("factor_integer requires n >= 1");
  std::map<Integer, int> acc;
  u64 iters = budget.rho_iterations;
  Integer cof = factor_into(acc, n, trial_primes(budget.trial_limit), iters);
  return finish(acc, cof);
}

PartialFactorization factor_pow_minus_one(const Integer& a, u64 n, const Budget& budget) {
  if (a < 2) throw input_error("factor_pow_minus_one requires a >= 2");
  if (n < 1) throw input_error("factor_pow_minus_one requires n >= 1");

  const Integer whole = pow_int(a, n) - 1;

  // cyclotomic pieces: a^n - 1 = prod_{d | n} Phi_d(a), and
  // Phi_d(a) = prod_{e | d} (a^e - 1)^{mu(d/e)}
  std::vector<u64> divisors;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divisors.push_back(d);
      if (d != n / d) divisors.push_back(n / d);
    }
  }
  std::sort(divisors.begin(), divisors.end());

  Integer check = 1;
  std::vector<Integer> pieces;
  for (u64 d : divisors) {
    Integer num = 1, den = 1;
    for (u64 e : divisors) {
      if (d % e != 0) continue;
      switch (moebius(d / e)) {
        case 1: num *= pow_int(a, e) - 1; break;
        case -1: den *= pow_int(a, e) - 1; break;
        default: break;
      }
    }
    Integer phi;
    mpz_divexact(phi.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    check *= phi;
    if (phi > 1) pieces.push_back(phi);
  }
  if (check != whole) throw invariant_violation("cyclotomic product mismatch for a^n - 1");

  std::map<Integer, int> acc;
  u64 iters = budget.rho_iterations;
  Integer cofactor = 1;
  const auto& trial = trial_primes(budget.trial_limit);
  for (const Integer& piece : pieces) cofactor *= factor_into(acc, piece, trial, iters);
  return finish(acc, cofactor);
}

Integer factorization_value(const Factorization& f) {
  Integer v = 1;
  for (const auto& [p, e] : f) v *= pow_int(p, static_cast<u64>(e));
  return v;
}

} // namespace liftexp
