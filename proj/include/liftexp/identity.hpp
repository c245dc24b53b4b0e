#pragma once

#include <utility>

#include "liftexp/arith.hpp"
#include "liftexp/integer.hpp"

namespace liftexp {

enum class Sign { minus, plus };

inline const char* sign_name(Sign s) { return s == Sign::minus ? "minus" : "plus"; }

// An ordered coprime base pair. Stored canonically with |a| < |b|; signs are
// kept (the statements allow negative bases). |a| = |b| is rejected: with the
// coprimality requirement that leaves only {1, -1}, for which a^n +/- b^n
// degenerates to 0 or +/-2.
class BasePair {
public:
  BasePair(i64 a, i64 b);

  i64 a() const { return a_; }
  i64 b() const { return b_; }

  bool operator==(const BasePair& o) const { return a_ == o.a_ && b_ == o.b_; }

private:
  i64 a_;
  i64 b_;
};

// Both sides of the valuation identity at one point (a, b, n, p, sign).
struct DefectReport {
  BasePair pair;
  u64 n;
  Integer p;
  Sign sign;
  int lhs_valuation;   // nu_p(a^n +/- b^n)
  int vp_n;            // nu_p(n)
  int rhs_valuation;   // nu_p(a^(p-1) - b^(p-1)), or the p = 2 replacement
  int defect;          // lhs_valuation - vp_n
  bool identity_holds; // defect == rhs_valuation
};

inline constexpr int kValuationCap = 64;      // hard cap for identity-side valuations
inline constexpr u64 kDefaultBitBudget = 1'000'000; // direct_valuation size guard, in bits

// nu_p(a^n +/- b^n) without forming a^n +/- b^n: nu_p(n) plus the order-side
// valuation, with the p = 2 sign/parity clauses. Requires p coprime to ab and
// p | a^n +/- b^n. The p = 2 plus form with even n is out of scope unless
// extensions is set, in which case the oracle-validated constant 1 is returned.
int predicted_valuation(const BasePair& pair, u64 n, const Integer& p, Sign sign,
                        bool extensions = false);

// Brute-force oracle: materializes a^n +/- b^n and takes vp. The bit budget
// bounds n * bitlength(max(|a|, |b|)).
int direct_valuation(const BasePair& pair, u64 n, const Integer& p, Sign sign,
                     u64 bit_budget = kDefaultBitBudget);

// Fills a DefectReport. The left side comes from the oracle when it fits the
// bit budget and from the identity path otherwise; when both are available
// they are computed and compared, and disagreement is fatal. extensions
// admits the p = 2 plus/even-n case with its constant 1.
DefectReport defect_report(const BasePair& pair, u64 n, const Integer& p, Sign sign,
                           bool extensions = false, u64 bit_budget = kDefaultBitBudget);

// The n = 1 reduction: under the stronger hypothesis p | a +/- b (and p
// coprime to ab), returns nu_p(n) + nu_p(a +/- b), adjusted by the p = 2
// even-n clause where the plain formula provably fails. Checked against the
// oracle when within budget.
int lemma13_check(const BasePair& pair, u64 n, const Integer& p, Sign sign,
                  u64 bit_budget = kDefaultBitBudget);

// d = ord_p(a b^-1) and nu_p(a^d - b^d); asserts the latter equals
// nu_p(a^(p-1) - b^(p-1)), which the identity forces since nu_p(d) = 0.
std::pair<u64, int> order_point_valuation(const BasePair& pair, u64 p, int cap = kValuationCap);

} // namespace liftexp
