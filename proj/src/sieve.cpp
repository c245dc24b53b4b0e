#include "liftexp/sieve.hpp"

#include <algorithm>
#include <cmath>

#include "liftexp/errors.hpp"

namespace liftexp {

std::vector<u64> primes_upto(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;
  std::vector<char> composite(limit + 1, 0);
  for (u64 i = 2; i * i <= limit; ++i) {
    if (!composite[i]) {
      for (u64 j = i * i; j <= limit; j += i) composite[j] = 1;
    }
  }
  for (u64 i = 2; i <= limit; ++i) {
    if (!composite[i]) out.push_back(i);
  }
  return out;
}

void primes_in(u64 lo, u64 hi, const std::function<void(u64)>& fn, std::size_t segment_bytes) {
  if (lo < 2 || lo >= hi) throw range_error("primes_in requires 2 <= lo < hi");
  if (segment_bytes == 0) segment_bytes = kDefaultSegmentBytes;

  const u64 top = hi - 1;
  const u64 root = static_cast<u64>(std::sqrt(static_cast<double>(top))) + 1;
  const std::vector<u64> base = primes_upto(root);

  std::vector<char> sieve;
  for (u64 low = lo; low < hi; low += segment_bytes) {
    const u64 high = std::min<u64>(low + segment_bytes, hi); // segment is [low, high)
    sieve.assign(high - low, 1);
    for (u64 p : base) {
      if (p * p >= high) break;
      u64 start = std::max(p * p, ((low + p - 1) / p) * p);
      for (u64 j = start; j < high; j += p) sieve[j - low] = 0;
    }
    for (u64 n = low; n < high; ++n) {
      if (sieve[n - low]) fn(n);
    }
  }
}

std::vector<u64> primes_in(u64 lo, u64 hi, std::size_t segment_bytes) {
  std::vector<u64> out;
  primes_in(lo, hi, [&](u64 p) { out.push_back(p); }, segment_bytes);
  return out;
}

} // namespace liftexp
