#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "liftexp/identity.hpp"

namespace liftexp {

// Exact orders are needed up to 5 by the survey; the cap bounds escalation
// work on pathological constructed bases.
inline constexpr int kDefaultOrderCap = 8;

struct WieferichRecord {
  u64 p;
  BasePair pair;
  int order;
  bool at_least; // true -> order saturated at the cap (reported as ">=order")
};

struct SurveyReport {
  int a_max;
  u64 prime_limit;
  int min_order;
  u64 pair_count; // admissible coprime pairs 1 <= a < b <= a_max
  std::vector<WieferichRecord> records;
  u64 distinct_pairs_hit;
  u64 max_prime_seen; // largest prime among the records; 0 when none
};

struct SpectrumReport {
  i64 a;
  u64 prime_limit;
  int w_observed; // max over scanned p coprime to a of nu_p(a^(p-1) - 1)
  bool saturated; // the max hit the cap, so it is a lower bound
  std::vector<u64> argmax_primes;
};

struct ScanOptions {
  int cap = kDefaultOrderCap;
  unsigned workers = 1;
  std::optional<std::string> checkpoint_path{};
  bool resume = false;
  std::function<void(const WieferichRecord&)> emit{}; // streaming hook, fires in order
};

// nu_p(a^(p-1) - b^(p-1)) for p coprime to ab, exact below cap.
OrderValue wieferich_order(u64 p, const BasePair& pair, int cap = kDefaultOrderCap);

// All Wieferich records (order >= 2) for one pair over odd primes p <= prime_limit,
// sorted by p. The result is independent of chunking and worker count.
std::vector<WieferichRecord> scan_pair(const BasePair& pair, u64 prime_limit,
                                       const ScanOptions& opt = {});

// Order >= min_order records over every coprime pair 1 <= a < b <= a_max and
// every odd prime p <= prime_limit. One power table per prime makes a pair
// evaluation a subtraction instead of a modpow.
SurveyReport survey(int a_max, u64 prime_limit, int min_order, int cap = kDefaultOrderCap,
                    unsigned workers = 1);

// The pair (3^k - t, 3^k + t), to which 3 is Wieferich of order >= k
// (their square difference is 4t*3^k). Requires t even, not divisible by 3,
// and below 3^k.
BasePair construct_base(u64 k, u64 t);

// Observed truncation of the spectrum sup_p nu_p(a^(p-1) - 1) over all
// primes p <= prime_limit with p coprime to a (p = 2 contributes nu_2(a - 1)).
SpectrumReport wa_spectrum(i64 a, u64 prime_limit, int cap = kDefaultOrderCap);

// Resumable-progress sidecar: one line "<pair_a> <pair_b> <last_prime_done> <cap>".
void write_checkpoint(const std::string& path, const BasePair& pair, u64 last_prime_done, int cap);
std::optional<u64> read_checkpoint(const std::string& path, const BasePair& pair);

} // namespace liftexp
