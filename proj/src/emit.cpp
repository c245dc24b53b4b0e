#include "liftexp/emit.hpp"

#include <ostream>
#include <sstream>

#include "liftexp/errors.hpp"

namespace liftexp {

namespace {

nlohmann::ordered_json order_json(int order, bool at_least) {
  if (at_least) return ">=" + std::to_string(order);
  return order;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string scalar_text(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

} // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json-lines") return OutputFormat::json_lines;
  if (name == "csv") return OutputFormat::csv;
  if (name == "human") return OutputFormat::human;
  throw input_error("unknown output format: " + name);
}

nlohmann::ordered_json json_int(const Integer& x) {
  if (mpz_fits_slong_p(x.get_mpz_t())) return static_cast<long>(mpz_get_si(x.get_mpz_t()));
  if (mpz_sgn(x.get_mpz_t()) > 0 && mpz_fits_ulong_p(x.get_mpz_t()))
    return static_cast<unsigned long>(mpz_get_ui(x.get_mpz_t()));
  return to_string(x);
}

void Emitter::object(const Fields& fields) {
  switch (format_) {
    case OutputFormat::json_lines: {
      nlohmann::ordered_json j;
      for (const auto& [k, v] : fields) j[k] = v;
      out_ << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv: {
      std::string columns;
      for (const auto& [k, v] : fields) {
        if (!columns.empty()) columns += ',';
        columns += k;
      }
      if (columns != csv_columns_) {
        csv_columns_ = columns;
        out_ << columns << '\n';
      }
      bool first = true;
      for (const auto& [k, v] : fields) {
        if (!first) out_ << ',';
        first = false;
        out_ << csv_escape(scalar_text(v));
      }
      out_ << '\n';
      break;
    }
    case OutputFormat::human: {
      bool first = true;
      for (const auto& [k, v] : fields) {
        if (!first) out_ << "  ";
        first = false;
        out_ << k << '=' << scalar_text(v);
      }
      out_ << '\n';
      break;
    }
  }
}

void Emitter::record(const WieferichRecord& r) {
  object({{"p", r.p},
          {"a", r.pair.a()},
          {"b", r.pair.b()},
          {"order", order_json(r.order, r.at_least)}});
}

void Emitter::survey(const SurveyReport& r) {
  for (const WieferichRecord& rec : r.records) record(rec);
  object({{"a_max", r.a_max},
          {"prime_limit", r.prime_limit},
          {"min_order", r.min_order},
          {"pair_count", r.pair_count},
          {"records", r.records.size()},
          {"distinct_pairs_hit", r.distinct_pairs_hit},
          {"max_prime_seen", r.max_prime_seen}});
}

void Emitter::spectrum(const SpectrumReport& r) {
  nlohmann::ordered_json argmax;
  if (format_ == OutputFormat::json_lines) {
    argmax = nlohmann::ordered_json::array();
    for (u64 p : r.argmax_primes) argmax.push_back(p);
  } else {
    std::string joined;
    for (u64 p : r.argmax_primes) {
      if (!joined.empty()) joined += ';';
      joined += std::to_string(p);
    }
    argmax = joined;
  }
  object({{"a", r.a},
          {"prime_limit", r.prime_limit},
          {"w_observed", r.w_observed},
          {"saturated", r.saturated},
          {"argmax_primes", argmax}});
}

void Emitter::defect(const DefectReport& r) {
  object({{"a", r.pair.a()},
          {"b", r.pair.b()},
          {"n", r.n},
          {"p", json_int(r.p)},
          {"sign", sign_name(r.sign)},
          {"lhs_valuation", r.lhs_valuation},
          {"vp_n", r.vp_n},
          {"rhs_valuation", r.rhs_valuation},
          {"defect", r.defect},
          {"identity_holds", r.identity_holds}});
}

void Emitter::verdict(const Integer& x, const Integer& y, const Integer& z,
                      const CriterionVerdict& v) {
  nlohmann::ordered_json pair;
  if (format_ == OutputFormat::json_lines) {
    pair = nlohmann::ordered_json::array({v.pair.a(), v.pair.b()});
  } else {
    pair = std::to_string(v.pair.a()) + ";" + std::to_string(v.pair.b());
  }
  object({{"x", json_int(x)},
          {"y", json_int(y)},
          {"z", json_int(z)},
          {"p", json_int(v.p)},
          {"divides", std::string(1, v.divides)},
          {"pair", pair},
          {"order", order_json(v.observed_order, v.observed_at_least)},
          {"required", v.required_order},
          {"exact_multiplicity", v.multiplicity_identity_holds}});
}

void Emitter::split(const FactorSplit& s) {
  Fields fields = {{"a", json_int(s.a)},
                   {"n", s.n},
                   {"m1", json_int(s.m1)},
                   {"mN", json_int(s.mN)},
                   {"mW", json_int(s.mW)},
                   {"m22", json_int(s.m22)},
                   {"bound_mN_ok", s.bound_mN_ok}};
  if (!s.complete()) fields.emplace_back("cofactor", json_int(s.cofactor));
  object(fields);
}

void Emitter::avg_power(const AvgPowerReport& r) {
  for (const AvgPowerSample& s : r.samples)
    object({{"a", json_int(r.a)},
            {"n", s.n},
            {"value", s.value},
            {"complete", s.complete},
            {"squarefree_n", s.squarefree_n}});
  object({{"a", json_int(r.a)},
          {"n_max", r.n_max},
          {"max_over_squarefree_n", r.max_over_squarefree_n},
          {"w_effective", r.w_effective},
          {"bound_holds", r.bound_holds}});
}

} // namespace liftexp
