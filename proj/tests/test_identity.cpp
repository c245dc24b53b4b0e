#include "doctest.h"

#include <numeric>

#include "liftexp/errors.hpp"
#include "liftexp/identity.hpp"

using namespace liftexp;

TEST_SUITE("identity") {

TEST_CASE("base pair canonicalization") {
  const BasePair p(13, 3);
  CHECK(p.a() == 3);
  CHECK(p.b() == 13);
  CHECK(BasePair(3, 13) == p);
  const BasePair q(-2, 3);
  CHECK(q.a() == -2);
  CHECK(q.b() == 3);
  CHECK_THROWS_AS(BasePair(0, 5), input_error);
  CHECK_THROWS_AS(BasePair(4, 0), input_error);
  CHECK_THROWS_AS(BasePair(2, 4), input_error);
  CHECK_THROWS_AS(BasePair(6, 15), input_error);
  CHECK_THROWS_AS(BasePair(7, 7), input_error);
  CHECK_THROWS_AS(BasePair(-5, 5), input_error);
}

TEST_CASE("predicted equals direct on the wieferich witness") {
  const BasePair pair(2, 1);
  CHECK(predicted_valuation(pair, 364, 1093, Sign::minus) == 2);
  CHECK(direct_valuation(pair, 364, 1093, Sign::minus) == 2);
}

TEST_CASE("defect examples") {
  const BasePair pair(2, 1);
  const auto r1 = defect_report(pair, 3, 7, Sign::minus);
  CHECK(r1.lhs_valuation == 1);
  CHECK(r1.vp_n == 0);
  CHECK(r1.rhs_valuation == 1);
  CHECK(r1.defect == 1);
  CHECK(r1.identity_holds);

  const auto r2 = defect_report(pair, 21, 7, Sign::minus);
  CHECK(r2.lhs_valuation == 2);
  CHECK(r2.vp_n == 1);
  CHECK(r2.defect == 1);
  CHECK(r2.identity_holds);

  const auto r3 = defect_report(pair, 364, 1093, Sign::minus);
  CHECK(r3.defect == 2);
  CHECK(r3.identity_holds);
}

TEST_CASE("defect does not depend on n") {
  // whenever p divides a^n - b^n, the defect equals its value at the order d
  const BasePair pair(3, 13);
  const auto [d, val] = order_point_valuation(pair, 19);
  CHECK(d == 9);
  CHECK(val == 2);
  for (u64 n : {d, 2 * d, 19 * d, 38 * d}) {
    const auto r = defect_report(pair, n, 19, Sign::minus);
    CHECK(r.defect == val);
    CHECK(r.identity_holds);
  }

  const BasePair w(2, 1);
  const auto [dw, vw] = order_point_valuation(w, 1093);
  CHECK(dw == 364);
  CHECK(vw == 2);
}

TEST_CASE("two-adic clauses") {
  // minus, even n, ab = 3 mod 4: the plus side carries the valuation
  CHECK(predicted_valuation(BasePair(3, 1), 2, 2, Sign::minus) == 3);
  CHECK(direct_valuation(BasePair(3, 1), 2, 2, Sign::minus) == 3);
  // minus, odd n
  CHECK(predicted_valuation(BasePair(5, 1), 3, 2, Sign::minus) ==
        direct_valuation(BasePair(5, 1), 3, 2, Sign::minus));
  // plus, odd n
  CHECK(predicted_valuation(BasePair(3, 5), 3, 2, Sign::plus) ==
        direct_valuation(BasePair(3, 5), 3, 2, Sign::plus));
  // plus, even n is out of scope without the extension
  CHECK_THROWS_AS(predicted_valuation(BasePair(3, 1), 2, 2, Sign::plus), out_of_scope_error);
  CHECK(predicted_valuation(BasePair(3, 1), 2, 2, Sign::plus, true) == 1);
  CHECK(direct_valuation(BasePair(3, 1), 2, 2, Sign::plus) == 1);
}

TEST_CASE("extension constant reported directly") {
  const auto r = defect_report(BasePair(1, 3), 2, 2, Sign::plus, true);
  CHECK(r.lhs_valuation == 1);
  CHECK(r.rhs_valuation == 1);
  CHECK(r.identity_holds);
  CHECK_THROWS_AS(defect_report(BasePair(1, 3), 2, 2, Sign::plus), out_of_scope_error);
}

TEST_CASE("signed bases reduce to an effective sign") {
  const BasePair q(-2, 3);
  // (-2)^3 - 3^3 = -35: the magnitude form is the plus one
  CHECK(predicted_valuation(q, 3, 5, Sign::minus) == 1);
  CHECK(direct_valuation(q, 3, 5, Sign::minus) == 1);
  // (-2)^3 + 3^3 = 19: the magnitude form is the minus one
  CHECK(predicted_valuation(q, 3, 19, Sign::plus) ==
        direct_valuation(q, 3, 19, Sign::plus));
}

TEST_CASE("identity against the oracle over a grid") {
  int checked = 0;
  for (i64 a = 1; a <= 10; ++a) {
    for (i64 b = a + 1; b <= 11; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const BasePair pair(a, b);
      for (u64 n = 1; n <= 8; ++n) {
        for (u64 pv : {2ull, 3ull, 5ull, 7ull, 13ull}) {
          const Integer p = static_cast<unsigned long>(pv);
          for (Sign sign : {Sign::minus, Sign::plus}) {
            const int direct = direct_valuation(pair, n, p, sign);
            try {
              const int predicted = predicted_valuation(pair, n, p, sign);
              CHECK(predicted == direct);
              ++checked;
            } catch (const not_divisible_error&) {
              CHECK(direct == 0);
            } catch (const base_divisible_error&) {
              CHECK((a % i64(pv) == 0 || b % i64(pv) == 0));
            } catch (const out_of_scope_error&) {
              // p = 2, plus form, even n: only the extension constant applies
              CHECK(predicted_valuation(pair, n, p, sign, true) == direct);
              CHECK(direct == 1);
            }
          }
        }
      }
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("negative bases against the oracle") {
  for (i64 a : {-9, -7, -4, -3, -2}) {
    for (i64 b : {2, 3, 5, 11}) {
      if (std::gcd(-a, b) != 1 || -a == b) continue;
      const BasePair pair(a, b);
      for (u64 n = 1; n <= 6; ++n) {
        for (u64 pv : {2ull, 3ull, 5ull, 7ull}) {
          const Integer p = static_cast<unsigned long>(pv);
          for (Sign sign : {Sign::minus, Sign::plus}) {
            const int direct = direct_valuation(pair, n, p, sign);
            try {
              const int predicted = predicted_valuation(pair, n, p, sign);
              CHECK(predicted == direct);
            } catch (const not_divisible_error&) {
              CHECK(direct == 0);
            } catch (const base_divisible_error&) {
            } catch (const out_of_scope_error&) {
              const int predicted = predicted_valuation(pair, n, p, sign, true);
              CHECK(predicted == direct);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("hypothesis checks of the n = 1 reduction") {
  // 3 | 5^4 - 4^4 but 3 does not divide 5 - 4
  CHECK(direct_valuation(BasePair(5, 4), 4, 3, Sign::minus) == 2);
  CHECK_THROWS_AS(lemma13_check(BasePair(5, 4), 2, 3, Sign::minus), hypothesis_error);
  CHECK_THROWS_AS(lemma13_check(BasePair(5, 4), 4, 3, Sign::minus), hypothesis_error);

  CHECK(lemma13_check(BasePair(1, 4), 6, 3, Sign::minus) == 2);
  CHECK(lemma13_check(BasePair(1, 2), 3, 3, Sign::plus) == 2);
  // plus form with even n loses divisibility altogether
  CHECK_THROWS_AS(lemma13_check(BasePair(1, 2), 2, 3, Sign::plus), hypothesis_error);
  // p = 2 plus form is out of scope for the reduction
  CHECK_THROWS_AS(lemma13_check(BasePair(1, 3), 1, 2, Sign::plus), out_of_scope_error);
  // p = 2, even n: corrected clause
  CHECK(lemma13_check(BasePair(1, 3), 2, 2, Sign::minus) == 3);
  CHECK(lemma13_check(BasePair(1, 7), 4, 2, Sign::minus) == 5);
}

TEST_CASE("order point valuation") {
  const auto [d, v] = order_point_valuation(BasePair(1, 2), 1093);
  CHECK(d == 364);
  CHECK(v == 2);
  CHECK_THROWS_AS(order_point_valuation(BasePair(1, 2), 2), input_error);
  CHECK_THROWS_AS(order_point_valuation(BasePair(1, 2), 91), input_error);
  CHECK_THROWS_AS(order_point_valuation(BasePair(1, 3), 3), base_divisible_error);
}

TEST_CASE("input guards") {
  CHECK_THROWS_AS(predicted_valuation(BasePair(1, 2), 0, 7, Sign::minus), input_error);
  CHECK_THROWS_AS(predicted_valuation(BasePair(1, 2), 3, 6, Sign::minus), input_error);
  CHECK_THROWS_AS(predicted_valuation(BasePair(1, 2), 3, 2, Sign::minus), base_divisible_error);
  CHECK_THROWS_AS(direct_valuation(BasePair(1, 2), 1u << 20, 7, Sign::minus, 1000), resource_error);
}

} // TEST_SUITE
