#pragma once

#include <cstdint>
#include <stdexcept>

namespace swcodes::combin {

// Exact binomial coefficients in 64-bit range. The rank/unrank machinery never
// needs counts beyond 2^(ell+1) words, so n is capped where uint64 stays exact.
inline constexpr int kMaxN = 62;

std::uint64_t choose(int n, int k);

/// Sum of choose(len, w) for w in [lo, hi] intersected with [0, len].
std::uint64_t count_weight_in(int len, int lo, int hi);

/// Sum of choose(len, w) for w in [0, len] \ [lo, hi].
std::uint64_t count_weight_outside(int len, int lo, int hi);

}  // namespace swcodes::combin
