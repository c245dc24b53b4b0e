#pragma once

#include <utility>
#include <vector>

#include "liftexp/integer.hpp"

namespace liftexp {

// Work limits for factoring. trial_limit bounds trial division; rho_iterations
// is a shared pool of Pollard-rho function evaluations for one factoring call.
// 64-bit inputs always factor completely regardless of the budget.
struct Budget {
  u64 trial_limit = 1'000'000;
  u64 rho_iterations = 10'000'000;
};

// (prime, exponent) list sorted by prime
using Factorization = std::vector<std::pair<Integer, int>>;

struct PartialFactorization {
  Factorization factors;
  Integer cofactor = 1; // 1 when fully factored, else the unfactored composite remainder
  bool complete() const { return cofactor == 1; }
};

// Full factorization of any 64-bit n >= 1 (trial division + Brent's rho).
std::vector<std::pair<u64, int>> factor_u64(u64 n);

// Budgeted factorization of arbitrary-precision n >= 1.
PartialFactorization factor_integer(const Integer& n, const Budget& budget);

// Factorization of a^n - 1 (a >= 2, n >= 1) that splits off the algebraic
// factors Phi_d(a) for d | n before handing the pieces to factor_integer.
PartialFactorization factor_pow_minus_one(const Integer& a, u64 n, const Budget& budget);

Integer factorization_value(const Factorization& f);

} // namespace liftexp
