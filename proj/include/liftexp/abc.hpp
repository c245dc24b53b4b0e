#pragma once

#include <vector>

#include "liftexp/factor.hpp"
#include "liftexp/integer.hpp"

namespace liftexp {

// Splitting of a^n - 1 into squarefree / powerful parts, with the powerful
// part refined by whether its primes divide n and whether they are Wieferich
// to base a.
struct FactorSplit {
  Integer a;
  u64 n = 1;
  Factorization factorization; // of the factored part of a^n - 1
  Integer cofactor = 1;        // unfactored remainder; 1 when complete
  Integer m1 = 1;              // squarefree part
  Integer m2 = 1;              // powerful part
  Integer m21 = 1;             // primes of m2 that divide n
  Integer m22 = 1;             // primes of m2 that do not divide n
  Integer mN = 1;              // non-Wieferich part of m21
  Integer mW = 1;              // Wieferich part of m21
  bool bound_mN_ok = true;     // mN <= n * rad(n)
  bool complete() const { return cofactor == 1; }
};

struct AvgPowerSample {
  u64 n = 0;
  double value = 0.0; // log(a^n - 1) / log(rad(a^n - 1)); 0 when incomplete
  bool complete = false;
  bool squarefree_n = false;
};

struct AvgPowerReport {
  Integer a;
  u64 n_max = 0;
  std::vector<AvgPowerSample> samples;
  double max_over_squarefree_n = 0.0; // over complete samples; 0 if none
  // largest per-prime lifting constant observed across complete samples
  int w_effective = 0;
  // exact multiplicative check (a^n - 1) <= rad^(1 + w_effective) on every
  // complete squarefree sample; never trusts the float values above
  bool bound_holds = true;
};

// Whether p divides a^(p-1) - 1 to order >= 2. For p = 2 the lifting
// identity's own constant is used instead (nu_2(a - 1) for odd n, the
// a mod 4 dispatch for even n), which is the quantity the splitting bounds
// actually rest on. Results for odd p are cached across calls.
bool is_wieferich_to_base(const Integer& p, const Integer& a, u64 n);

// Product of the distinct primes of m. The factorization must certify m:
// prime entries, positive exponents, no duplicates, product equal to m.
Integer radical(const Integer& m, const Factorization& factorization);

// Computes the certified split of a^n - 1 and asserts its invariants. With
// allow_partial an unfactorable cofactor is tolerated and reported in the
// result instead of raising; classification then covers the factored part.
FactorSplit factor_split(const Integer& a, u64 n, const Budget& budget = Budget{},
                         bool allow_partial = false);

// Samples log(a^n - 1)/log(rad(a^n - 1)) for n = 2..n_max, cross-checks the
// valuation identity on every prime of every complete sample, and tests the
// squarefree-n bound exactly.
AvgPowerReport avg_power(const Integer& a, u64 n_max, const Budget& budget = Budget{});

} // namespace liftexp
