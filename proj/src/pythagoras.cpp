#include "liftexp/pythagoras.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "liftexp/errors.hpp"
#include "liftexp/primality.hpp"
#include "liftexp/wieferich.hpp"

namespace liftexp {

namespace {

i64 checked_i64(u64 v) {
  if (v > static_cast<u64>(INT64_MAX)) throw input_error("triple member exceeds supported range");
  return static_cast<i64>(v);
}

// Per-prime verdicts for x^2 + y^2 = z^2 with pairwise coprime members.
// required is the reported lower bound (2 for the square criterion itself,
// 1 = n - 1 when called from the general checker); the exact law
// observed = 2 * multiplicity is asserted either way.
std::vector<CriterionVerdict> verify_core(u64 x, u64 y, u64 z, int required) {
  std::vector<CriterionVerdict> out;
  const u64 members[3] = {x, y, z};
  const char names[3] = {'x', 'y', 'z'};
  for (int i = 0; i < 3; ++i) {
    const u64 member = members[i];
    const u64 c1 = members[(i + 1) % 3];
    const u64 c2 = members[(i + 2) % 3];
    const BasePair pair(checked_i64(c1), checked_i64(c2));
    for (auto [p, e] : factor_u64(member)) {
      CriterionVerdict v{Integer(static_cast<unsigned long>(p)), names[i], pair, 0, false,
                         required, e, false};
      if (p == 2) {
        // z and the odd leg are both odd; the two-adic identity splits over
        // z - odd and z + odd
        const u64 odd = (i == 0) ? y : x; // the other leg
        const int s = vp_u64(z - odd, 2) + vp_u64(z + odd, 2);
        v.observed_order = s;
        v.multiplicity_identity_holds = (s == 2 * e);
      } else {
        OrderValue ov = wieferich_order(p, pair, 2 * e + 2);
        v.observed_order = ov.value;
        v.observed_at_least = ov.at_least;
        v.multiplicity_identity_holds = !ov.at_least && ov.value == 2 * e;
      }
      if (!v.multiplicity_identity_holds) {
        std::ostringstream msg;
        msg << "square-criterion multiplicity failed at p = " << p << " dividing " << names[i]
            << " of (" << x << ", " << y << ", " << z << "): observed " << v.observed_order
            << ", expected " << 2 * e;
        throw invariant_violation(msg.str());
      }
      out.push_back(v);
    }
  }
  return out;
}

} // namespace

std::vector<PythTriple> gen_primitive_triples(u64 z_limit) {
  if (z_limit < 5) throw input_error("gen_primitive_triples requires z_limit >= 5");
  if (z_limit > 10'000'000) throw input_error("gen_primitive_triples supports z_limit <= 1e7");
  std::vector<PythTriple> out;
  for (u64 m = 2; m * m + 1 <= z_limit; ++m) {
    for (u64 n = 1 + (m % 2); n < m; n += 2) {
      if (std::gcd(m, n) != 1) continue;
      const u64 z = m * m + n * n;
      if (z > z_limit) break;
      out.push_back(PythTriple{m * m - n * n, 2 * m * n, z, true});
    }
  }
  std::sort(out.begin(), out.end(), [](const PythTriple& a, const PythTriple& b) {
    return a.z != b.z ? a.z < b.z : a.x < b.x;
  });
  return out;
}

std::vector<CriterionVerdict> verify_triple(const PythTriple& t, const Budget&) {
  u64 x = t.x, y = t.y, z = t.z;
  if (x < 1 || y < 1 || z < 1) throw input_error("triple members must be positive");
  if (Integer(static_cast<unsigned long>(x)) * x + Integer(static_cast<unsigned long>(y)) * y !=
      Integer(static_cast<unsigned long>(z)) * z)
    throw input_error("not a Pythagorean triple");

  // reduce to the primitive core; the criterion's hypothesis is coprimality
  const u64 g = std::gcd(std::gcd(x, y), z);
  x /= g;
  y /= g;
  z /= g;
  if (std::gcd(x, y) != 1) throw input_error("triple does not reduce to a primitive one");
  if (x % 2 == 0) std::swap(x, y); // canonical roles: x odd, y even, z odd

  return verify_core(x, y, z, 2);
}

std::vector<CriterionVerdict> check_flt_candidate(const Integer& x, const Integer& y,
                                                  const Integer& z, u64 n, const Budget& budget) {
  if (x < 1 || y < 1 || z < 1) throw input_error("x, y, z must be positive");
  if (!(n == 2 || (n % 2 == 1 && is_prime(Integer(static_cast<unsigned long>(n))))))
    throw input_error("n must be 2 or an odd prime");
  if (gcd(x, y) != 1 || gcd(x, z) != 1 || gcd(y, z) != 1)
    throw input_error("x, y, z must be pairwise coprime");
  const u64 width = static_cast<u64>(std::max(bit_length(x), std::max(bit_length(y), bit_length(z))));
  if (n * width > kDefaultBitBudget) throw resource_error("x^n + y^n = z^n check exceeds the bit budget");
  if (pow_int(x, n) + pow_int(y, n) != pow_int(z, n)) {
    std::ostringstream msg;
    msg << x << "^" << n << " + " << y << "^" << n << " != " << z << "^" << n;
    throw not_a_solution_error(msg.str());
  }

  if (n == 2) {
    if (!fits_u64(x) || !fits_u64(y) || !fits_u64(z))
      throw input_error("square checks support members up to 2^63");
    u64 ux = to_u64(x), uy = to_u64(y), uz = to_u64(z);
    if (ux % 2 == 0) std::swap(ux, uy);
    return verify_core(ux, uy, uz, 1); // required order n - 1 = 1; the exact law still binds
  }

  // n an odd prime: no solutions are known (none exist if FLT holds), but the
  // criterion itself is implemented faithfully
  const bool first_case = (x * y * z) % n != 0;
  const int required = first_case ? static_cast<int>(n) : static_cast<int>(n) - 1;
  const Integer nn = static_cast<unsigned long>(n);

  const Integer* members[3] = {&x, &y, &z};
  const char names[3] = {'x', 'y', 'z'};
  std::vector<CriterionVerdict> out;
  for (int i = 0; i < 3; ++i) {
    const Integer& member = *members[i];
    const Integer& c1 = *members[(i + 1) % 3];
    const Integer& c2 = *members[(i + 2) % 3];
    if (!fits_u64(c1) || !fits_u64(c2) || to_u64(c1) > static_cast<u64>(INT64_MAX) ||
        to_u64(c2) > static_cast<u64>(INT64_MAX))
      throw input_error("verdict pairs support members up to 2^63");
    const BasePair pair(static_cast<i64>(to_u64(c1)), static_cast<i64>(to_u64(c2)));

    PartialFactorization f = factor_integer(member, budget);
    if (!f.complete())
      throw resource_error(std::string("factoring ") + names[i] + " left unfactored cofactor " +
                           to_string(f.cofactor));

    for (const auto& [p, e] : f.factors) {
      CriterionVerdict v{p, names[i], pair, 0, false, required, e, false};
      if (p == 2) {
        // n odd: nu_2 of the one-step difference equals nu_2 of the n-th
        // power difference, so the clause reads off a +/- b directly
        const Integer D = (i == 2) ? Integer(x + y) : (i == 0 ? Integer(z - y) : Integer(z - x));
        v.observed_order = vp(D, 2);
        v.required_order = static_cast<int>(n); // the p = 2 clause demands n even in the second case
        v.multiplicity_identity_holds = v.observed_order == static_cast<int>(n) * e;
      } else {
        const int evp_n = vp(nn, p);
        const int cap = static_cast<int>(n) * e + 2;
        OrderValue ov = power_diff_valuation(c1, c2, p - 1, p, cap);
        v.observed_order = ov.value;
        v.observed_at_least = ov.at_least;
        v.multiplicity_identity_holds =
            !ov.at_least && ov.value == static_cast<int>(n) * e - evp_n;
      }
      out.push_back(v);

      // divisor clause: a prime of x that also divides z - y must do so to
      // order >= n - 1 (and symmetrically)
      if (p != 2) {
        const Integer D = (i == 2) ? Integer(x + y) : (i == 0 ? Integer(z - y) : Integer(z - x));
        if (mpz_divisible_p(D.get_mpz_t(), p.get_mpz_t()) && vp(D, p) < static_cast<int>(n) - 1) {
          std::ostringstream msg;
          msg << "divisor clause failed: nu_" << p << "(" << D << ") < n - 1";
          throw invariant_violation(msg.str());
        }
      }
    }
  }
  return out;
}

} // namespace liftexp
