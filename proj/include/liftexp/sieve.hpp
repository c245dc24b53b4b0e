#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "liftexp/integer.hpp"

namespace liftexp {

inline constexpr std::size_t kDefaultSegmentBytes = 1 << 20;

// Streams the primes in [lo, hi) in increasing order through fn, using a
// segmented sieve whose working set is bounded by segment_bytes. The output
// is identical under any segmentation. Requires 2 <= lo < hi.
void primes_in(u64 lo, u64 hi, const std::function<void(u64)>& fn,
               std::size_t segment_bytes = kDefaultSegmentBytes);

std::vector<u64> primes_in(u64 lo, u64 hi, std::size_t segment_bytes = kDefaultSegmentBytes);

// Simple sieve of [0, limit]; returns all primes <= limit. Used for base
// primes and for trial-division tables.
std::vector<u64> primes_upto(u64 limit);

} // namespace liftexp
