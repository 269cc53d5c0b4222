#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace pfsp {

/// mt19937_64's output sequence is fixed by the standard. The helpers below avoid the
/// library-defined distributions so that seeded runs replay identically across toolchains.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). `bound` must be positive.
inline std::size_t uniform_index(Rng& rng, std::size_t bound)
{
    const std::uint64_t n = bound;
    const std::uint64_t limit = Rng::max() - (Rng::max() % n + 1) % n;  // largest unbiased draw
    std::uint64_t x = rng();
    while (x > limit) {
        x = rng();
    }
    return static_cast<std::size_t>(x % n);
}

/// Fisher-Yates shuffle driven by uniform_index.
template <typename T>
void shuffle(std::span<T> items, Rng& rng)
{
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[uniform_index(rng, i)]);
    }
}

}  // namespace pfsp
