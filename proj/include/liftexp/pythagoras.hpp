#pragma once

#include <vector>

#include "liftexp/factor.hpp"
#include "liftexp/identity.hpp"

namespace liftexp {

struct PythTriple {
  u64 x; // odd leg m^2 - n^2
  u64 y; // even leg 2mn
  u64 z; // hypotenuse m^2 + n^2
  bool primitive;
};

// One prime's criterion check against the pair complementary to the member
// it divides.
struct CriterionVerdict {
  Integer p;
  char divides; // 'x', 'y' or 'z'
  BasePair pair;
  int observed_order;
  bool observed_at_least;
  int required_order;
  int member_multiplicity; // nu_p of the divided member
  // odd p: observed == 2e (squares) / n*e; p = 2: the split two-adic identity
  bool multiplicity_identity_holds;
};

// Every primitive triple with z <= z_limit via m > n >= 1, coprime, opposite
// parity; ordered by z then x. z_limit is capped at 1e7 (the list is
// materialized).
std::vector<PythTriple> gen_primitive_triples(u64 z_limit);

// For each odd prime p^e dividing a member: nu_p over the complementary pair
// must be exactly 2e (and so >= 2); for p = 2 dividing the even leg:
// nu_2(z - odd) + nu_2(z + odd) = 2 nu_2(even). Non-primitive triples are
// reduced to their primitive core first.
std::vector<CriterionVerdict> verify_triple(const PythTriple& t, const Budget& budget = {});

// The general-exponent checker: requires x^n + y^n = z^n exactly (expected to
// fail for n >= 3), pairwise coprime inputs, n = 2 or an odd prime. Emits
// per-prime verdicts with required order n - 1 (n in the first case), the
// p = 2 clause, and the z - y divisor clause.
std::vector<CriterionVerdict> check_flt_candidate(const Integer& x, const Integer& y,
                                                  const Integer& z, u64 n,
                                                  const Budget& budget = {});

} // namespace liftexp
