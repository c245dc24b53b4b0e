#include "doctest.h"

#include <numeric>

#include "liftexp/errors.hpp"
#include "liftexp/pythagoras.hpp"

using namespace liftexp;

TEST_SUITE("pythagoras") {

TEST_CASE("primitive triple generation") {
  const auto t30 = gen_primitive_triples(30);
  REQUIRE(t30.size() == 5);
  CHECK(t30[0].x == 3);
  CHECK(t30[0].y == 4);
  CHECK(t30[0].z == 5);
  CHECK(t30[1].z == 13);
  CHECK(t30[4].z == 29);

  const auto t100 = gen_primitive_triples(100);
  CHECK(t100.size() == 16);
  u64 last_z = 0;
  for (const auto& t : t100) {
    CHECK(t.x % 2 == 1);
    CHECK(t.y % 2 == 0);
    CHECK(t.z % 2 == 1);
    CHECK(std::gcd(t.x, t.y) == 1);
    CHECK(Integer(static_cast<unsigned long>(t.x)) * t.x +
              Integer(static_cast<unsigned long>(t.y)) * t.y ==
          Integer(static_cast<unsigned long>(t.z)) * t.z);
    CHECK(t.z >= last_z);
    last_z = t.z;
  }
  CHECK_THROWS_AS(gen_primitive_triples(4), input_error);
}

TEST_CASE("the 3-4-5 verdicts in detail") {
  const auto v = verify_triple(PythTriple{3, 4, 5, true});
  REQUIRE(v.size() == 3);

  CHECK(v[0].p == 3);
  CHECK(v[0].divides == 'x');
  CHECK(v[0].pair == BasePair(4, 5));
  CHECK(v[0].observed_order == 2);
  CHECK(v[0].required_order == 2);
  CHECK(v[0].member_multiplicity == 1);
  CHECK(v[0].multiplicity_identity_holds);

  CHECK(v[1].p == 2);
  CHECK(v[1].divides == 'y');
  CHECK(v[1].member_multiplicity == 2);
  CHECK(v[1].observed_order == 4); // nu_2(5-3) + nu_2(5+3)
  CHECK(v[1].multiplicity_identity_holds);

  CHECK(v[2].p == 5);
  CHECK(v[2].divides == 'z');
  CHECK(v[2].pair == BasePair(3, 4));
  CHECK(v[2].observed_order == 2);
  CHECK(v[2].multiplicity_identity_holds);
}

TEST_CASE("scaled triples reduce to the primitive core") {
  const auto v = verify_triple(PythTriple{9, 12, 15, false});
  REQUIRE(v.size() == 3);
  CHECK(v[0].p == 3);
  CHECK(v[0].pair == BasePair(4, 5));
  const auto w = verify_triple(PythTriple{8, 6, 10, false}); // even member listed first
  REQUIRE(w.size() == 3);
  CHECK(w[0].p == 3);
  CHECK(w[0].divides == 'x');
}

TEST_CASE("rejections") {
  CHECK_THROWS_AS(verify_triple(PythTriple{3, 4, 6, false}), input_error);
  CHECK_THROWS_AS(verify_triple(PythTriple{0, 4, 5, false}), input_error);
}

TEST_CASE("sweep below 2000") {
  const auto triples = gen_primitive_triples(2000);
  CHECK(triples.size() > 100);
  for (const auto& t : triples) {
    const auto v = verify_triple(t); // throws on any criterion violation
    for (const auto& verdict : v) {
      CHECK(verdict.multiplicity_identity_holds);
      CHECK(verdict.observed_order >= 2);
    }
  }
}

TEST_CASE("general checker at n = 2") {
  const auto v = check_flt_candidate(4, 3, 5, 2);
  REQUIRE(v.size() == 3);
  for (const auto& verdict : v) {
    CHECK(verdict.required_order == 1);
    CHECK(verdict.multiplicity_identity_holds);
  }
}

TEST_CASE("general checker rejections") {
  CHECK_THROWS_AS(check_flt_candidate(3, 4, 5, 3), not_a_solution_error);
  CHECK_THROWS_AS(check_flt_candidate(1, 1, 2, 3), not_a_solution_error);
  CHECK_THROWS_AS(check_flt_candidate(2, 4, 6, 2), input_error);
  CHECK_THROWS_AS(check_flt_candidate(3, 4, 5, 4), input_error);
  CHECK_THROWS_AS(check_flt_candidate(3, 4, 5, 9), input_error);
  CHECK_THROWS_AS(check_flt_candidate(0, 4, 5, 2), input_error);
  const Integer huge = (Integer(1) << 2000) + 1;
  CHECK_THROWS_AS(check_flt_candidate(huge, 2, huge + 2, 601), resource_error);
}

} // TEST_SUITE
