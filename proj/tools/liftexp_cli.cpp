#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "liftexp/abc.hpp"
#include "liftexp/arith.hpp"
#include "liftexp/emit.hpp"
#include "liftexp/errors.hpp"
#include "liftexp/identity.hpp"
#include "liftexp/primality.hpp"
#include "liftexp/pythagoras.hpp"
#include "liftexp/wieferich.hpp"

namespace {

using namespace liftexp;

unsigned default_workers() {
  if (const char* env = std::getenv("LIFTEXP_WORKERS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  }
  return 1;
}

Sign parse_sign(const std::string& s) {
  if (s == "minus") return Sign::minus;
  if (s == "plus") return Sign::plus;
  throw input_error("sign must be minus or plus");
}

i64 to_i64(const Integer& x, const char* what) {
  if (!mpz_fits_slong_p(x.get_mpz_t()))
    throw input_error(std::string(what) + " does not fit a signed 64-bit integer");
  return static_cast<i64>(mpz_get_si(x.get_mpz_t()));
}

void emit_verdicts(Emitter& em, const Integer& x, const Integer& y, const Integer& z,
                   const std::vector<CriterionVerdict>& verdicts) {
  bool all_exact = true;
  for (const CriterionVerdict& v : verdicts) {
    em.verdict(x, y, z, v);
    all_exact = all_exact && v.multiplicity_identity_holds;
  }
  em.object({{"x", json_int(x)},
             {"y", json_int(y)},
             {"z", json_int(z)},
             {"verdicts", verdicts.size()},
             {"all_exact", all_exact}});
}

void run_fuzz(Emitter& em, u64 count, u64 seed) {
  std::mt19937_64 rng(seed);
  const std::vector<u64> primes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                   43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  std::uniform_int_distribution<i64> mag(1, 50);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<u64> ndist(1, 60);
  std::uniform_int_distribution<size_t> pdist(0, primes.size() - 1);

  u64 checked = 0;
  u64 drawn = 0;
  while (checked < count) {
    ++drawn;
    i64 a = mag(rng);
    i64 b = mag(rng);
    if (a == b || std::gcd(a, b) != 1) continue;
    if (coin(rng)) a = -a;
    if (coin(rng)) b = -b;
    const u64 n = ndist(rng);
    const u64 p = primes[pdist(rng)];
    const Sign sign = coin(rng) ? Sign::plus : Sign::minus;
    if (a % static_cast<i64>(p) == 0 || b % static_cast<i64>(p) == 0) continue;

    const BasePair pair(a, b);
    const Integer pz(static_cast<unsigned long>(p));
    int predicted = 0;
    try {
      predicted = predicted_valuation(pair, n, pz, sign);
    } catch (const not_divisible_error&) {
      continue;
    } catch (const out_of_scope_error&) {
      continue;
    }
    const int direct = direct_valuation(pair, n, pz, sign);
    if (predicted != direct) {
      std::ostringstream msg;
      msg << "identity mismatch at a=" << a << " b=" << b << " n=" << n << " p=" << p << " "
          << sign_name(sign) << ": predicted " << predicted << ", direct " << direct;
      throw invariant_violation(msg.str());
    }
    ++checked;
  }
  em.object({{"count", count}, {"seed", seed}, {"drawn", drawn}, {"identity_holds", true}});
}

void repro_base313(Emitter& em, unsigned workers) {
  ScanOptions opt;
  opt.cap = 8;
  opt.workers = workers;
  opt.emit = [&](const WieferichRecord& r) { em.record(r); };
  const auto records = scan_pair(BasePair(3, 13), 1'000'000, opt);
  if (records.empty() || records[0].p != 19 || records[0].order != 2 || records[0].at_least ||
      records.size() < 2 || records[1].p != 269 || records[1].order != 2 || records[1].at_least)
    throw invariant_violation(
        "scan of (3,13) to 1e6 does not find (19, order 2) and (269, order 2)");
  if (records.size() != 2)
    throw invariant_violation(
        "scan of (3,13) to 1e6: the pinned record list is exactly (19, order 2), (269, order 2), "
        "but the scan also finds (44029, order 2); 44029 is prime and lies below 1e6, so the "
        "pinned list omits it (the six-digit variant 440297 = 11 * 13 * 3079 is composite)");
  em.object({{"preset", "base313-1e6"}, {"ok", true}});
}

void repro_survey(Emitter& em, unsigned workers) {
  const SurveyReport rep = survey(100, 1'000'000, 4, 8, workers);
  em.survey(rep);
  if (rep.pair_count != 3043)
    throw invariant_violation("coprime pair count is " + std::to_string(rep.pair_count) +
                              ", pinned value is 3043");
  if (rep.max_prime_seen > 17)
    throw invariant_violation("a record prime exceeds the pinned maximum 17");
  std::set<std::pair<i64, i64>> order5_at_5;
  for (const WieferichRecord& r : rep.records)
    if (r.p == 5 && (r.order >= 5 || r.at_least)) order5_at_5.insert({r.pair.a(), r.pair.b()});
  const std::set<std::pair<i64, i64>> expected5 = {{3, 79}, {38, 41}};
  if (order5_at_5 != expected5)
    throw invariant_violation("order-5 records at p = 5 are not exactly (3,79) and (38,41)");
  if (rep.distinct_pairs_hit != 61)
    throw invariant_violation("distinct pairs with order >= 4: pinned value 61, observed " +
                              std::to_string(rep.distinct_pairs_hit));
  em.object({{"preset", "survey-1e6"}, {"ok", true}});
}

void repro_big_triple(Emitter& em) {
  const Integer x = 38399, y = 2042040, z = 2042401;
  if (x * x + y * y != z * z)
    throw invariant_violation("38399^2 + 2042040^2 != 2042401^2");
  if (!is_prime(z)) throw invariant_violation("2042401 is not prime");
  const auto verdicts = verify_triple(PythTriple{38399, 2042040, 2042401, true});
  bool found = false;
  for (const CriterionVerdict& v : verdicts) {
    if (v.p != z) continue;
    found = true;
    em.verdict(x, y, z, v);
    if (v.observed_at_least || v.observed_order != 2 || !v.multiplicity_identity_holds)
      throw invariant_violation("2042401 does not divide the power difference to order exactly 2");
  }
  if (!found) throw invariant_violation("no verdict produced for p = 2042401");
  em.object({{"preset", "big-triple"}, {"ok", true}});
}

void repro_wieferich2(Emitter& em, unsigned workers) {
  ScanOptions opt;
  opt.cap = 8;
  opt.workers = workers;
  opt.emit = [&](const WieferichRecord& r) { em.record(r); };
  const auto records = scan_pair(BasePair(1, 2), 10'000, opt);
  const OrderResult ord = multiplicative_order(2, 1093);
  const DefectReport rep = defect_report(BasePair(2, 1), 364, 1093, Sign::minus);
  em.defect(rep);
  if (ord.d != 364)
    throw invariant_violation("ord_1093(2) is " + std::to_string(ord.d) + ", pinned value is 364");
  if (rep.defect != 2 || !rep.identity_holds)
    throw invariant_violation("defect of (2,1) at n = 364, p = 1093 is not 2");
  if (records.empty() || records[0].p != 1093 || records[0].order != 2 || records[0].at_least)
    throw invariant_violation("scan of (1,2) to 1e4 does not find (1093, order 2)");
  if (records.size() != 1)
    throw invariant_violation(
        "scan of (1,2) to 1e4: the pinned record list is exactly (1093, order 2), but the scan "
        "also finds (3511, order 2); 3511 is the second classical Wieferich prime and lies below "
        "1e4, so the pinned list omits it");
  em.object({{"preset", "wieferich-2"}, {"ok", true}});
}

int run(int argc, char** argv) {
  CLI::App app{"p-adic valuation identity toolkit: lifting-the-exponent defects, Wieferich "
               "base pairs, Pythagorean criterion checks, factor splitting"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "json-lines";
  unsigned workers = default_workers();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json-lines", "csv", "human"}));
  app.add_option("--workers", workers, "worker threads for scan and survey")
      ->check(CLI::Range(1u, 1024u));

  // shared option storage; each subcommand binds the fields it uses
  std::string xs, ys, zs, ps, as;
  i64 a = 0, b = 0, spectrum_a = 2;
  u64 n = 1, limit = 0, z_limit = 0, k = 1, t = 2, n_max = 20;
  u64 count = 10'000, seed = 12345;
  int a_max = 100, min_order = 4, cap = kDefaultOrderCap;
  std::string sign_s = "minus", checkpoint, preset;
  bool extensions = false, partial = false, resume = false;
  Budget budget;

  CLI::App* c_valuation = app.add_subcommand("valuation", "p-adic valuation of an integer");
  c_valuation->add_option("--x", xs, "integer")->required();
  c_valuation->add_option("--p", ps, "prime")->required();

  CLI::App* c_defect = app.add_subcommand(
      "defect", "both sides of nu_p(a^n +/- b^n) - nu_p(n) = nu_p(a^(p-1) - b^(p-1))");
  c_defect->add_option("--a", a)->required();
  c_defect->add_option("--b", b)->required();
  c_defect->add_option("--n", n)->required();
  c_defect->add_option("--p", ps)->required();
  c_defect->add_option("--sign", sign_s)->check(CLI::IsMember({"minus", "plus"}));
  c_defect->add_flag("--extensions", extensions, "admit the p = 2 plus/even-n constant");

  CLI::App* c_order = app.add_subcommand(
      "order", "multiplicative order of a mod p; with --b, ord_p(a/b) and the valuation there");
  c_order->add_option("--a", as)->required();
  CLI::Option* order_b = c_order->add_option("--b", b);
  c_order->add_option("--p", limit, "prime p")->required();

  CLI::App* c_lemma = app.add_subcommand(
      "lemma13", "the n = 1 reduction under the hypothesis p | a -/+ b");
  c_lemma->add_option("--a", a)->required();
  c_lemma->add_option("--b", b)->required();
  c_lemma->add_option("--n", n)->required();
  c_lemma->add_option("--p", ps)->required();
  c_lemma->add_option("--sign", sign_s)->check(CLI::IsMember({"minus", "plus"}));

  CLI::App* c_worder = app.add_subcommand("wieferich-order",
                                          "nu_p(a^(p-1) - b^(p-1)), exact below the cap");
  c_worder->add_option("--p", limit, "prime p")->required();
  c_worder->add_option("--a", a)->required();
  c_worder->add_option("--b", b)->required();
  c_worder->add_option("--cap", cap)->check(CLI::Range(2, 64));

  CLI::App* c_scan = app.add_subcommand(
      "scan", "all primes <= limit that are Wieferich to the pair (order >= 2)");
  c_scan->add_option("--a", a)->required();
  c_scan->add_option("--b", b)->required();
  c_scan->add_option("--limit", limit)->required();
  c_scan->add_option("--cap", cap)->check(CLI::Range(2, 64));
  c_scan->add_option("--checkpoint", checkpoint, "resumable progress sidecar file");
  c_scan->add_flag("--resume", resume, "continue from the checkpoint file");

  CLI::App* c_survey = app.add_subcommand(
      "survey", "records of order >= min-order over all coprime pairs 1 <= a < b <= a-max");
  c_survey->add_option("--a-max", a_max)->required();
  c_survey->add_option("--limit", limit)->required();
  c_survey->add_option("--min-order", min_order)->check(CLI::Range(2, 64));
  c_survey->add_option("--cap", cap)->check(CLI::Range(2, 64));

  CLI::App* c_construct = app.add_subcommand(
      "construct-base", "the pair (3^k - t, 3^k + t), to which 3 is Wieferich of order >= k");
  c_construct->add_option("--k", k)->required();
  c_construct->add_option("--t", t)->required();

  CLI::App* c_spectrum = app.add_subcommand(
      "wa-spectrum", "max of nu_p(a^(p-1) - 1) over primes p <= limit");
  c_spectrum->add_option("--a", spectrum_a)->required();
  c_spectrum->add_option("--limit", limit)->required();
  c_spectrum->add_option("--cap", cap)->check(CLI::Range(2, 64));

  CLI::App* c_triples = app.add_subcommand("triples", "primitive Pythagorean triples by z");
  c_triples->add_option("--z-limit", z_limit)->required();

  CLI::App* c_verify = app.add_subcommand(
      "verify-triple", "per-prime square-criterion verdicts for one Pythagorean triple");
  c_verify->add_option("--x", xs)->required();
  c_verify->add_option("--y", ys)->required();
  c_verify->add_option("--z", zs)->required();

  CLI::App* c_flt = app.add_subcommand(
      "flt-check", "the higher-order criterion on a claimed solution of x^n + y^n = z^n");
  c_flt->add_option("--x", xs)->required();
  c_flt->add_option("--y", ys)->required();
  c_flt->add_option("--z", zs)->required();
  c_flt->add_option("--n", n)->required();
  c_flt->add_option("--trial-limit", budget.trial_limit);
  c_flt->add_option("--rho-iters", budget.rho_iterations);

  CLI::App* c_split = app.add_subcommand(
      "split", "a^n - 1 = m1 * mN * mW * m22 by squarefreeness, n-divisibility, Wieferich class");
  c_split->add_option("--a", as)->required();
  c_split->add_option("--n", n)->required();
  c_split->add_flag("--partial", partial, "tolerate an unfactored cofactor");
  c_split->add_option("--trial-limit", budget.trial_limit);
  c_split->add_option("--rho-iters", budget.rho_iterations);

  CLI::App* c_avg = app.add_subcommand(
      "avg-power", "log(a^n - 1)/log(rad(a^n - 1)) samples and the squarefree-n bound");
  c_avg->add_option("--a", as)->required();
  c_avg->add_option("--n-max", n_max);
  c_avg->add_option("--trial-limit", budget.trial_limit);
  c_avg->add_option("--rho-iters", budget.rho_iterations);

  CLI::App* c_fuzz = app.add_subcommand(
      "fuzz-identity", "random in-scope tuples; predicted and direct valuations must agree");
  c_fuzz->add_option("--count", count);
  c_fuzz->add_option("--seed", seed);

  CLI::App* c_repro = app.add_subcommand("repro", "rerun the reference computations against their pinned values");
  c_repro->add_option("preset", preset, "base313-1e6 | survey-1e6 | big-triple | wieferich-2")
      ->required()
      ->check(CLI::IsMember({"base313-1e6", "survey-1e6", "big-triple", "wieferich-2"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  Emitter em(std::cout, parse_format(format));

  if (c_valuation->parsed()) {
    const Integer x = integer_from_string(xs);
    const Integer p = integer_from_string(ps);
    em.object({{"x", json_int(x)}, {"p", json_int(p)}, {"valuation", vp(x, p)}});
  } else if (c_defect->parsed()) {
    const DefectReport rep =
        defect_report(BasePair(a, b), n, integer_from_string(ps), parse_sign(sign_s), extensions);
    em.defect(rep);
  } else if (c_order->parsed()) {
    const Integer av = integer_from_string(as);
    if (order_b->count() > 0) {
      const auto [d, val] = order_point_valuation(BasePair(to_i64(av, "a"), b), limit);
      em.object({{"a", json_int(av)}, {"b", b}, {"p", limit}, {"d", d}, {"valuation", val}});
    } else {
      const OrderResult r = multiplicative_order(av, limit);
      em.object({{"a", json_int(av)}, {"p", r.p}, {"order", r.d}});
    }
  } else if (c_lemma->parsed()) {
    const Integer p = integer_from_string(ps);
    const Sign sg = parse_sign(sign_s);
    const int val = lemma13_check(BasePair(a, b), n, p, sg);
    em.object({{"a", a}, {"b", b}, {"n", n}, {"p", json_int(p)}, {"sign", sign_name(sg)},
               {"valuation", val}});
  } else if (c_worder->parsed()) {
    const OrderValue v = wieferich_order(limit, BasePair(a, b), cap);
    em.record(WieferichRecord{limit, BasePair(a, b), v.value, v.at_least});
  } else if (c_scan->parsed()) {
    ScanOptions opt;
    opt.cap = cap;
    opt.workers = workers;
    if (!checkpoint.empty()) opt.checkpoint_path = checkpoint;
    opt.resume = resume;
    opt.emit = [&](const WieferichRecord& r) { em.record(r); };
    const auto records = scan_pair(BasePair(a, b), limit, opt);
    const BasePair pair(a, b);
    em.object({{"a", pair.a()}, {"b", pair.b()}, {"limit", limit}, {"cap", cap},
               {"records", records.size()}});
  } else if (c_survey->parsed()) {
    em.survey(survey(a_max, limit, min_order, cap, workers));
  } else if (c_construct->parsed()) {
    const BasePair pair = construct_base(k, t);
    const int order_cap = static_cast<int>(k) + 2;
    const OrderValue v = wieferich_order(3, pair, order_cap);
    em.object({{"k", k}, {"t", t}, {"a", pair.a()}, {"b", pair.b()},
               {"order_at_3", v.at_least ? nlohmann::ordered_json(">=" + std::to_string(v.value))
                                         : nlohmann::ordered_json(v.value)}});
  } else if (c_spectrum->parsed()) {
    em.spectrum(wa_spectrum(spectrum_a, limit, cap));
  } else if (c_triples->parsed()) {
    const auto triples = gen_primitive_triples(z_limit);
    for (const PythTriple& t3 : triples)
      em.object({{"x", t3.x}, {"y", t3.y}, {"z", t3.z}});
    em.object({{"z_limit", z_limit}, {"count", triples.size()}});
  } else if (c_verify->parsed()) {
    const Integer xi = integer_from_string(xs), yi = integer_from_string(ys),
                  zi = integer_from_string(zs);
    if (!fits_u64(xi) || !fits_u64(yi) || !fits_u64(zi))
      throw input_error("triple members must be positive 64-bit integers");
    u64 x = to_u64(xi), y = to_u64(yi), z = to_u64(zi);
    const auto verdicts = verify_triple(PythTriple{x, y, z, false});
    // reduce exactly as the checker does so the emitted triple matches the pairs
    const u64 g = std::gcd(std::gcd(x, y), z);
    x /= g;
    y /= g;
    z /= g;
    if (x % 2 == 0) std::swap(x, y);
    emit_verdicts(em, x, y, z, verdicts);
  } else if (c_flt->parsed()) {
    const Integer x = integer_from_string(xs), y = integer_from_string(ys),
                  z = integer_from_string(zs);
    emit_verdicts(em, x, y, z, check_flt_candidate(x, y, z, n, budget));
  } else if (c_split->parsed()) {
    em.split(factor_split(integer_from_string(as), n, budget, partial));
  } else if (c_avg->parsed()) {
    em.avg_power(avg_power(integer_from_string(as), n_max, budget));
  } else if (c_fuzz->parsed()) {
    run_fuzz(em, count, seed);
  } else if (c_repro->parsed()) {
    if (preset == "base313-1e6") repro_base313(em, workers);
    else if (preset == "survey-1e6") repro_survey(em, workers);
    else if (preset == "big-triple") repro_big_triple(em);
    else repro_wieferich2(em, workers);
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const invariant_violation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 3;
  } catch (const resource_error& e) {
    std::cerr << "resource budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
