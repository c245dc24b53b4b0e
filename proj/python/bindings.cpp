#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "liftexp/abc.hpp"
#include "liftexp/arith.hpp"
#include "liftexp/errors.hpp"
#include "liftexp/factor.hpp"
#include "liftexp/identity.hpp"
#include "liftexp/primality.hpp"
#include "liftexp/pythagoras.hpp"
#include "liftexp/sieve.hpp"
#include "liftexp/wieferich.hpp"

namespace py = pybind11;

namespace pybind11 {
namespace detail {

// mpz_class <-> Python int, through decimal strings (exact at any size)
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    PyObject* s = PyObject_Str(src.ptr());
    if (!s) {
      PyErr_Clear();
      return false;
    }
    const char* text = PyUnicode_AsUTF8(s);
    bool ok = text != nullptr;
    if (ok) {
      try {
        value = mpz_class(text, 10);
      } catch (const std::invalid_argument&) {
        ok = false;
      }
    }
    Py_DECREF(s);
    if (!ok) PyErr_Clear();
    return ok;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return handle(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
  }
};

} // namespace detail
} // namespace pybind11

namespace {

using namespace liftexp;

Sign sign_of(const std::string& s) {
  if (s == "minus") return Sign::minus;
  if (s == "plus") return Sign::plus;
  throw input_error("sign must be 'minus' or 'plus'");
}

py::dict defect_dict(const DefectReport& r) {
  py::dict d;
  d["a"] = r.pair.a();
  d["b"] = r.pair.b();
  d["n"] = r.n;
  d["p"] = py::cast(r.p);
  d["sign"] = sign_name(r.sign);
  d["lhs_valuation"] = r.lhs_valuation;
  d["vp_n"] = r.vp_n;
  d["rhs_valuation"] = r.rhs_valuation;
  d["defect"] = r.defect;
  d["identity_holds"] = r.identity_holds;
  return d;
}

py::dict record_dict(const WieferichRecord& r) {
  py::dict d;
  d["p"] = r.p;
  d["a"] = r.pair.a();
  d["b"] = r.pair.b();
  d["order"] = r.order;
  d["at_least"] = r.at_least;
  return d;
}

py::dict verdict_dict(const CriterionVerdict& v) {
  py::dict d;
  d["p"] = py::cast(v.p);
  d["divides"] = std::string(1, v.divides);
  d["pair"] = py::make_tuple(v.pair.a(), v.pair.b());
  d["order"] = v.observed_order;
  d["at_least"] = v.observed_at_least;
  d["required"] = v.required_order;
  d["multiplicity"] = v.member_multiplicity;
  d["exact_multiplicity"] = v.multiplicity_identity_holds;
  return d;
}

py::list verdict_list(const std::vector<CriterionVerdict>& vs) {
  py::list out;
  for (const CriterionVerdict& v : vs) out.append(verdict_dict(v));
  return out;
}

} // namespace

PYBIND11_MODULE(_liftexp, m) {
  m.doc() = "p-adic valuation identity toolkit";

  py::register_exception<error>(m, "Error");
  py::register_exception<input_error>(m, "InputError");
  py::register_exception<resource_error>(m, "ResourceError");
  py::register_exception<invariant_violation>(m, "InvariantViolation");

  m.def("vp", &vp, py::arg("x"), py::arg("p"), "p-adic valuation of x");
  m.def("modpow", &modpow, py::arg("base"), py::arg("exponent"), py::arg("modulus"));
  m.def(
      "is_prime", [](const Integer& n) { return is_prime(n); }, py::arg("n"));
  m.def(
      "multiplicative_order",
      [](const Integer& a, u64 p) { return multiplicative_order(a, p).d; }, py::arg("a"),
      py::arg("p"));
  m.def(
      "power_diff_valuation",
      [](const Integer& a, const Integer& b, const Integer& e, const Integer& p, int cap) {
        const OrderValue v = power_diff_valuation(a, b, e, p, cap);
        return py::make_tuple(v.value, v.at_least);
      },
      py::arg("a"), py::arg("b"), py::arg("e"), py::arg("p"), py::arg("cap") = 8,
      "nu_p(a^e - b^e) as (value, at_least_flag)");

  m.def(
      "predicted_valuation",
      [](i64 a, i64 b, u64 n, const Integer& p, const std::string& sign, bool extensions) {
        return predicted_valuation(BasePair(a, b), n, p, sign_of(sign), extensions);
      },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("p"), py::arg("sign") = "minus",
      py::arg("extensions") = false);
  m.def(
      "direct_valuation",
      [](i64 a, i64 b, u64 n, const Integer& p, const std::string& sign) {
        return direct_valuation(BasePair(a, b), n, p, sign_of(sign));
      },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("p"), py::arg("sign") = "minus");
  m.def(
      "defect_report",
      [](i64 a, i64 b, u64 n, const Integer& p, const std::string& sign, bool extensions) {
        return defect_dict(defect_report(BasePair(a, b), n, p, sign_of(sign), extensions));
      },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("p"), py::arg("sign") = "minus",
      py::arg("extensions") = false);
  m.def(
      "lemma13_check",
      [](i64 a, i64 b, u64 n, const Integer& p, const std::string& sign) {
        return lemma13_check(BasePair(a, b), n, p, sign_of(sign));
      },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("p"), py::arg("sign") = "minus");

  m.def(
      "wieferich_order",
      [](u64 p, i64 a, i64 b, int cap) {
        const OrderValue v = wieferich_order(p, BasePair(a, b), cap);
        return py::make_tuple(v.value, v.at_least);
      },
      py::arg("p"), py::arg("a"), py::arg("b"), py::arg("cap") = kDefaultOrderCap);
  m.def(
      "scan_pair",
      [](i64 a, i64 b, u64 limit, int cap, unsigned workers) {
        ScanOptions opt;
        opt.cap = cap;
        opt.workers = workers;
        py::list out;
        for (const WieferichRecord& r : scan_pair(BasePair(a, b), limit, opt))
          out.append(record_dict(r));
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("limit"), py::arg("cap") = kDefaultOrderCap,
      py::arg("workers") = 1);
  m.def(
      "survey",
      [](int a_max, u64 limit, int min_order, int cap, unsigned workers) {
        const SurveyReport rep = survey(a_max, limit, min_order, cap, workers);
        py::dict d;
        d["a_max"] = rep.a_max;
        d["prime_limit"] = rep.prime_limit;
        d["min_order"] = rep.min_order;
        d["pair_count"] = rep.pair_count;
        py::list records;
        for (const WieferichRecord& r : rep.records) records.append(record_dict(r));
        d["records"] = records;
        d["distinct_pairs_hit"] = rep.distinct_pairs_hit;
        d["max_prime_seen"] = rep.max_prime_seen;
        return d;
      },
      py::arg("a_max"), py::arg("limit"), py::arg("min_order") = 4,
      py::arg("cap") = kDefaultOrderCap, py::arg("workers") = 1);
  m.def(
      "construct_base",
      [](u64 k, u64 t) {
        const BasePair pair = construct_base(k, t);
        return py::make_tuple(pair.a(), pair.b());
      },
      py::arg("k"), py::arg("t"));
  m.def(
      "wa_spectrum",
      [](i64 a, u64 limit, int cap) {
        const SpectrumReport rep = wa_spectrum(a, limit, cap);
        py::dict d;
        d["a"] = rep.a;
        d["prime_limit"] = rep.prime_limit;
        d["w_observed"] = rep.w_observed;
        d["saturated"] = rep.saturated;
        d["argmax_primes"] = rep.argmax_primes;
        return d;
      },
      py::arg("a"), py::arg("limit"), py::arg("cap") = kDefaultOrderCap);

  m.def(
      "primitive_triples",
      [](u64 z_limit) {
        py::list out;
        for (const PythTriple& t : gen_primitive_triples(z_limit))
          out.append(py::make_tuple(t.x, t.y, t.z));
        return out;
      },
      py::arg("z_limit"));
  m.def(
      "verify_triple",
      [](u64 x, u64 y, u64 z) { return verdict_list(verify_triple(PythTriple{x, y, z, false})); },
      py::arg("x"), py::arg("y"), py::arg("z"));
  m.def(
      "check_flt_candidate",
      [](const Integer& x, const Integer& y, const Integer& z, u64 n) {
        return verdict_list(check_flt_candidate(x, y, z, n));
      },
      py::arg("x"), py::arg("y"), py::arg("z"), py::arg("n"));

  m.def(
      "factor_split",
      [](const Integer& a, u64 n, bool partial) {
        const FactorSplit s = factor_split(a, n, Budget{}, partial);
        py::dict d;
        d["a"] = py::cast(s.a);
        d["n"] = s.n;
        d["m1"] = py::cast(s.m1);
        d["m2"] = py::cast(s.m2);
        d["m21"] = py::cast(s.m21);
        d["m22"] = py::cast(s.m22);
        d["mN"] = py::cast(s.mN);
        d["mW"] = py::cast(s.mW);
        d["bound_mN_ok"] = s.bound_mN_ok;
        d["complete"] = s.complete();
        d["cofactor"] = py::cast(s.cofactor);
        return d;
      },
      py::arg("a"), py::arg("n"), py::arg("partial") = false);
  m.def(
      "avg_power",
      [](const Integer& a, u64 n_max) {
        const AvgPowerReport rep = avg_power(a, n_max);
        py::dict d;
        d["a"] = py::cast(rep.a);
        d["n_max"] = rep.n_max;
        py::list samples;
        for (const AvgPowerSample& s : rep.samples) {
          py::dict e;
          e["n"] = s.n;
          e["value"] = s.value;
          e["complete"] = s.complete;
          e["squarefree_n"] = s.squarefree_n;
          samples.append(e);
        }
        d["samples"] = samples;
        d["max_over_squarefree_n"] = rep.max_over_squarefree_n;
        d["w_effective"] = rep.w_effective;
        d["bound_holds"] = rep.bound_holds;
        return d;
      },
      py::arg("a"), py::arg("n_max") = 20);
  m.def(
      "radical",
      [](const Integer& m, const std::vector<std::pair<Integer, int>>& factorization) {
        return radical(m, factorization);
      },
      py::arg("m"), py::arg("factorization"));
  m.def(
      "factor",
      [](const Integer& n) {
        const PartialFactorization f = factor_integer(n, Budget{});
        py::list out;
        for (const auto& [p, e] : f.factors) out.append(py::make_tuple(py::cast(p), e));
        return py::make_tuple(out, py::cast(f.cofactor));
      },
      py::arg("n"), "((prime, exponent) list, cofactor); cofactor 1 means complete");
  m.def(
      "primes_upto", [](u64 limit) { return primes_upto(limit); }, py::arg("limit"));
}
