#include "liftexp/abc.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <string>
#include <utility>

#include "liftexp/arith.hpp"
#include "liftexp/errors.hpp"
#include "liftexp/identity.hpp"
#include "liftexp/primality.hpp"

namespace liftexp {

namespace {

std::shared_mutex g_cache_mutex;
std::map<std::pair<Integer, Integer>, bool> g_wieferich_cache; // (p, a) for odd p

// nu_2(a^n - 1) - nu_2(n) for odd a, from the corrected two-adic clauses
int two_adic_constant(const Integer& a, u64 n) {
  if (n % 2 == 1) return vp(a - 1, 2);
  return mod_u64(a, 4) == 1 ? vp(a - 1, 2) : vp(a + 1, 2);
}

// nu_p(a^n - 1) - nu_p(n) as predicted by the lifting identity, capped
int prime_constant(const Integer& p, const Integer& a, u64 n, int cap) {
  if (p == 2) return two_adic_constant(a, n);
  return power_diff_valuation(a, 1, p - 1, p, cap).value;
}

double log2_mpz(const Integer& x) {
  signed long e = 0;
  const double d = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log2(d) + static_cast<double>(e);
}

Integer radical_u64(u64 n) {
  Integer r = 1;
  for (auto [p, e] : factor_u64(n)) r *= Integer(static_cast<unsigned long>(p));
  return r;
}

bool squarefree_u64(u64 n) {
  for (auto [p, e] : factor_u64(n))
    if (e > 1) return false;
  return true;
}

} // namespace

bool is_wieferich_to_base(const Integer& p, const Integer& a, u64 n) {
  if (a < 2) throw input_error("is_wieferich_to_base requires a >= 2");
  if (p < 2 || !is_prime(p)) throw input_error("is_wieferich_to_base requires p prime");
  if (p == 2) return two_adic_constant(a, n) >= 2;
  {
    std::shared_lock lock(g_cache_mutex);
    auto it = g_wieferich_cache.find({p, a});
    if (it != g_wieferich_cache.end()) return it->second;
  }
  OrderValue v = power_diff_valuation(a, 1, p - 1, p, 2);
  const bool wief = v.at_least || v.value >= 2;
  std::unique_lock lock(g_cache_mutex);
  g_wieferich_cache.emplace(std::make_pair(p, a), wief);
  return wief;
}

Integer radical(const Integer& m, const Factorization& factorization) {
  if (m < 1) throw input_error("radical requires m >= 1");
  Integer product = 1;
  Integer rad = 1;
  std::set<Integer> seen;
  for (const auto& [p, e] : factorization) {
    if (e < 1) throw certification_error("exponent of " + to_string(p) + " is not positive");
    if (!seen.insert(p).second) throw certification_error("duplicate prime " + to_string(p));
    if (!is_prime(p)) throw certification_error(to_string(p) + " is not prime");
    product *= pow_int(p, static_cast<u64>(e));
    rad *= p;
  }
  if (product != m)
    throw certification_error("factorization does not multiply to " + to_string(m));
  return rad;
}

FactorSplit factor_split(const Integer& a, u64 n, const Budget& budget, bool allow_partial) {
  if (a < 2) throw input_error("factor_split requires a >= 2");
  if (n < 1) throw input_error("factor_split requires n >= 1");
  if (n * static_cast<u64>(bit_length(a)) > kDefaultBitBudget)
    throw resource_error("a^n - 1 exceeds the bit budget");

  PartialFactorization pf = factor_pow_minus_one(a, n, budget);
  // pull remaining copies of identified primes out of the cofactor so the
  // recorded exponents are exact even when the cofactor stays composite
  for (auto& [p, e] : pf.factors)
    while (mpz_divisible_p(pf.cofactor.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(pf.cofactor.get_mpz_t(), pf.cofactor.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
  if (!pf.complete() && !allow_partial)
    throw resource_error("factoring a^n - 1 left unfactored cofactor " + to_string(pf.cofactor));

  FactorSplit s;
  s.a = a;
  s.n = n;
  s.factorization = pf.factors;
  s.cofactor = pf.cofactor;

  const Integer nn(static_cast<unsigned long>(n));
  for (const auto& [p, e] : s.factorization) {
    const Integer pe = pow_int(p, static_cast<u64>(e));
    if (e == 1) {
      s.m1 *= p;
      continue;
    }
    s.m2 *= pe;
    if (mpz_divisible_p(nn.get_mpz_t(), p.get_mpz_t())) {
      s.m21 *= pe;
      (is_wieferich_to_base(p, a, n) ? s.mW : s.mN) *= pe;
    } else {
      s.m22 *= pe;
      if (!is_wieferich_to_base(p, a, n))
        throw invariant_violation("repeated prime " + to_string(p) +
                                  " away from n is not Wieferich to base " + to_string(a));
    }
  }

  if (s.m1 * s.m2 * s.cofactor != pow_int(a, n) - 1)
    throw invariant_violation("split does not multiply back to a^n - 1");
  if (s.m2 != s.m21 * s.m22 || s.m21 != s.mN * s.mW)
    throw invariant_violation("split chain m2 = m21 * m22, m21 = mN * mW broken");
  if (gcd(s.m1, nn) != 1)
    throw invariant_violation("squarefree part shares a factor with n");
  for (const auto& [p, e] : s.factorization)
    if (e == 1 && is_wieferich_to_base(p, a, n))
      throw invariant_violation("squarefree part contains Wieferich prime " + to_string(p));
  s.bound_mN_ok = s.mN <= nn * radical_u64(n);
  if (!s.bound_mN_ok)
    throw invariant_violation("mN = " + to_string(s.mN) + " exceeds n * rad(n)");
  return s;
}

AvgPowerReport avg_power(const Integer& a, u64 n_max, const Budget& budget) {
  if (a < 2) throw input_error("avg_power requires a >= 2");
  if (n_max < 2 || n_max > 1000) throw input_error("avg_power requires 2 <= n_max <= 1000");
  if (n_max * static_cast<u64>(bit_length(a)) > kDefaultBitBudget)
    throw resource_error("a^n_max - 1 exceeds the bit budget");

  AvgPowerReport rep;
  rep.a = a;
  rep.n_max = n_max;
  std::vector<std::pair<Integer, Integer>> values; // (a^n - 1, radical), complete samples
  for (u64 n = 2; n <= n_max; ++n) {
    AvgPowerSample s;
    s.n = n;
    s.squarefree_n = squarefree_u64(n);
    PartialFactorization pf = factor_pow_minus_one(a, n, budget);
    if (!pf.complete()) {
      rep.samples.push_back(s);
      values.emplace_back(0, 0);
      continue;
    }
    const Integer m = pow_int(a, n) - 1;
    const Integer rad = radical(m, pf.factors);
    if (m < rad) throw invariant_violation("radical exceeds its argument");
    s.value = log2_mpz(m) / log2_mpz(rad);
    s.complete = true;

    const Integer nn(static_cast<unsigned long>(n));
    for (const auto& [p, e] : pf.factors) {
      const int vpn = vp(nn, p);
      const int c = prime_constant(p, a, n, e + 2);
      if (c != e - vpn)
        throw invariant_violation("valuation identity failed at p = " + to_string(p) +
                                  ", n = " + std::to_string(n));
      if (c > rep.w_effective) rep.w_effective = c;
    }
    rep.samples.push_back(s);
    values.emplace_back(m, rad);
  }

  for (size_t i = 0; i < rep.samples.size(); ++i) {
    const AvgPowerSample& s = rep.samples[i];
    if (!s.complete || !s.squarefree_n) continue;
    if (s.value > rep.max_over_squarefree_n) rep.max_over_squarefree_n = s.value;
    if (values[i].first > pow_int(values[i].second, static_cast<u64>(rep.w_effective) + 1))
      rep.bound_holds = false;
  }
  return rep;
}

} // namespace liftexp
