#include "liftexp/wieferich.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "liftexp/errors.hpp"
#include "liftexp/parallel.hpp"
#include "liftexp/primality.hpp"
#include "liftexp/sieve.hpp"

namespace liftexp {

namespace {

constexpr u64 kScanChunk = 1 << 22; // absolute prime-range chunk width
constexpr u64 kMaxScanLimit = 4'000'000'000ull; // keeps p^2 within 64 bits

u64 abs_u64(i64 x) { return x < 0 ? static_cast<u64>(-(x + 1)) + 1 : static_cast<u64>(x); }

// largest p^k with k <= cap fitting in 64 bits, k >= 2 for p <= 4e9
std::pair<u64, int> fitting_power(u64 p, int cap) {
  u64 m = p;
  int k = 1;
  while (k < cap && m <= UINT64_MAX / p) {
    m *= p;
    ++k;
  }
  return {m, k};
}

struct ChunkResult {
  std::vector<WieferichRecord> records;
  u64 last_prime = 0;
};

} // namespace

OrderValue wieferich_order(u64 p, const BasePair& pair, int cap) {
  if (cap < 2) throw input_error("wieferich_order requires cap >= 2");
  if (!is_prime_u64(p)) throw input_error("wieferich_order requires p prime");
  const Integer P = static_cast<unsigned long>(p);
  return power_diff_valuation(Integer(pair.a()), Integer(pair.b()), P - 1, P, cap);
}

std::vector<WieferichRecord> scan_pair(const BasePair& pair, u64 prime_limit,
                                       const ScanOptions& opt) {
  if (prime_limit < 3) throw input_error("scan_pair requires prime_limit >= 3");
  if (prime_limit > kMaxScanLimit) throw input_error("scan_pair supports prime_limit <= 4e9");
  if (opt.cap < 2) throw input_error("scan_pair requires cap >= 2");

  u64 start = 3;
  if (opt.resume) {
    if (!opt.checkpoint_path) throw input_error("resume requested without a checkpoint path");
    if (auto last = read_checkpoint(*opt.checkpoint_path, pair)) start = *last + 1;
  }
  const bool checkpointing = opt.checkpoint_path && prime_limit >= 10'000'000;

  const u64 A = abs_u64(pair.a());
  const u64 B = abs_u64(pair.b());
  const u64 n_chunks = (prime_limit - 1) / kScanChunk + 1; // chunk i covers [2 + i*W, ...)

  std::vector<WieferichRecord> out;
  u64 last_done = 0;

  run_chunked<ChunkResult>(
      n_chunks, opt.workers,
      [&](u64 chunk) {
        ChunkResult res;
        const u64 lo = 2 + chunk * kScanChunk;
        const u64 hi = std::min(prime_limit + 1, 2 + (chunk + 1) * kScanChunk);
        if (lo >= hi) return res;
        primes_in(lo, hi, [&](u64 p) {
          res.last_prime = p;
          if (p < start || p == 2) return;
          if (A % p == 0 || B % p == 0) return;
          const u64 p2 = p * p;
          const u64 ra = powmod_u64(A % p2, p - 1, p2);
          const u64 rb = powmod_u64(B % p2, p - 1, p2);
          if (ra != rb) return; // order 1, not Wieferich
          OrderValue v = wieferich_order(p, pair, opt.cap);
          res.records.push_back(WieferichRecord{p, pair, v.value, v.at_least});
        });
        return res;
      },
      [&](u64, ChunkResult& res) {
        for (const auto& rec : res.records) {
          if (opt.emit) opt.emit(rec);
          out.push_back(rec);
        }
        if (res.last_prime) last_done = res.last_prime;
        if (checkpointing && last_done)
          write_checkpoint(*opt.checkpoint_path, pair, last_done, opt.cap);
      });
  return out;
}

SurveyReport survey(int a_max, u64 prime_limit, int min_order, int cap, unsigned workers) {
  if (a_max < 2) throw input_error("survey requires a_max >= 2");
  if (a_max > 100000) throw input_error("survey supports a_max <= 100000");
  if (prime_limit < 3) throw input_error("survey requires prime_limit >= 3");
  if (prime_limit > kMaxScanLimit) throw input_error("survey supports prime_limit <= 4e9");
  if (min_order < 2) throw input_error("survey requires min_order >= 2");
  if (cap < min_order) throw input_error("survey requires cap >= min_order");

  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a < a_max; ++a) {
    for (int b = a + 1; b <= a_max; ++b) {
      if (std::gcd(a, b) == 1) pairs.emplace_back(a, b);
    }
  }

  const u64 n_chunks = (prime_limit - 1) / kScanChunk + 1;
  std::vector<WieferichRecord> records;

  run_chunked<std::vector<WieferichRecord>>(
      n_chunks, workers,
      [&](u64 chunk) {
        std::vector<WieferichRecord> res;
        const u64 lo = 2 + chunk * kScanChunk;
        const u64 hi = std::min(prime_limit + 1, 2 + (chunk + 1) * kScanChunk);
        if (lo >= hi) return res;
        std::vector<u64> table(static_cast<size_t>(a_max) + 1);
        primes_in(lo, hi, [&](u64 p) {
          if (p == 2) return;
          const auto [m, efit] = fitting_power(p, cap);
          const u64 p2 = p * p;
          for (int c = 1; c <= a_max; ++c)
            table[c] = (static_cast<u64>(c) % p == 0) ? m : powmod_u64(c, p - 1, m);
          for (const auto& [a, b] : pairs) {
            const u64 ta = table[a], tb = table[b];
            if (ta == m || tb == m) continue; // p divides a base
            const u64 diff = ta >= tb ? ta - tb : m - (tb - ta);
            int order;
            bool at_least = false;
            if (diff == 0) {
              // saturated the word-size modulus; settle exactly up to cap
              if (efit >= cap) {
                order = cap;
                at_least = true;
              } else {
                OrderValue v = power_diff_valuation(a, b, p - 1, Integer(static_cast<unsigned long>(p)), cap);
                order = v.value;
                at_least = v.at_least;
              }
            } else {
              if (diff % p2 != 0) continue; // order < 2 short-circuit
              order = vp_u64(diff, p);
            }
            if (order >= min_order)
              res.push_back(WieferichRecord{p, BasePair(a, b), order, at_least});
          }
        });
        return res;
      },
      [&](u64, std::vector<WieferichRecord>& res) {
        records.insert(records.end(), res.begin(), res.end());
      });

  SurveyReport rep{a_max,        prime_limit, min_order, pairs.size(), std::move(records),
                   0,            0};
  std::set<std::pair<i64, i64>> distinct;
  for (const auto& rec : rep.records) {
    distinct.emplace(rec.pair.a(), rec.pair.b());
    rep.max_prime_seen = std::max(rep.max_prime_seen, rec.p);
  }
  rep.distinct_pairs_hit = distinct.size();
  return rep;
}

BasePair construct_base(u64 k, u64 t) {
  if (k < 1 || k > 39) throw input_error("construct_base requires 1 <= k <= 39");
  if (t < 1) throw input_error("construct_base requires t >= 1");
  if (t % 2 != 0) throw construction_error("t must be even so both entries are odd");
  if (t % 3 == 0) throw construction_error("t must not be divisible by 3");
  i64 pk = 1;
  for (u64 i = 0; i < k; ++i) pk *= 3;
  if (t >= static_cast<u64>(pk)) throw construction_error("t must be below 3^k");
  const i64 lo = pk - static_cast<i64>(t);
  const i64 hi = pk + static_cast<i64>(t);
  if (std::gcd(lo, hi) != 1) throw construction_error("3^k - t and 3^k + t are not coprime");
  return BasePair(lo, hi);
}

SpectrumReport wa_spectrum(i64 a, u64 prime_limit, int cap) {
  if (a < 2) throw input_error("wa_spectrum requires a >= 2");
  if (prime_limit < 3) throw input_error("wa_spectrum requires prime_limit >= 3");
  if (prime_limit > kMaxScanLimit) throw input_error("wa_spectrum supports prime_limit <= 4e9");
  if (cap < 2) throw input_error("wa_spectrum requires cap >= 2");

  SpectrumReport rep{a, prime_limit, 0, false, {}};
  const u64 au = abs_u64(a);
  auto consider = [&](u64 p, int order, bool at_least) {
    if (order > rep.w_observed || (order == rep.w_observed && at_least && !rep.saturated)) {
      rep.w_observed = order;
      rep.saturated = at_least;
      rep.argmax_primes.clear();
    }
    if (order == rep.w_observed && at_least == rep.saturated) rep.argmax_primes.push_back(p);
  };

  if (au % 2 == 1) consider(2, vp(Integer(a) - 1, 2), false); // nu_2(a^(2-1) - 1), exact
  primes_in(3, prime_limit + 1, [&](u64 p) {
    if (au % p == 0) return;
    const u64 p2 = p * p;
    const u64 r = powmod_u64(au % p2, p - 1, p2);
    if (r != 1) {
      consider(p, 1, false);
      return;
    }
    OrderValue v = power_diff_valuation(a, 1, p - 1, Integer(static_cast<unsigned long>(p)), cap);
    consider(p, v.value, v.at_least);
  });
  return rep;
}

void write_checkpoint(const std::string& path, const BasePair& pair, u64 last_prime_done,
                      int cap) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw input_error("cannot write checkpoint file " + path);
  out << pair.a() << ' ' << pair.b() << ' ' << last_prime_done << ' ' << cap << '\n';
}

std::optional<u64> read_checkpoint(const std::string& path, const BasePair& pair) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  i64 a, b;
  u64 last;
  int cap;
  if (!(in >> a >> b >> last >> cap)) throw input_error("malformed checkpoint file " + path);
  if (a != pair.a() || b != pair.b())
    throw input_error("checkpoint file " + path + " belongs to a different pair");
  return last;
}

} // namespace liftexp
