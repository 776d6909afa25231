#pragma once

// Seeded draws with a fixed algorithm; std distributions are implementation
// defined and would make instances differ between standard libraries.

#include <cstdint>
#include <random>

namespace ffreiman {

using Rng = std::mt19937_64;

/// Uniform in [0, n); n > 0. Rejection sampling, no modulo bias.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do v = rng();
    while (v >= limit);
    return v % n;
}

/// Uniform in [lo, hi].
inline long uniform_int(Rng& rng, long lo, long hi) {
    return lo + static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace ffreiman
