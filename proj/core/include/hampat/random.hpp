#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace hampat {

using Rng = std::mt19937_64;

__extension__ using uint128 = unsigned __int128;

// SplitMix64 finaliser; used to derive independent sub-seeds from one run seed.
[[nodiscard]] constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform integer in [0, bound). Lemire's multiply-shift with rejection, so
// results do not depend on the standard library's distribution code.
[[nodiscard]] inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const uint128 product = static_cast<uint128>(rng()) * bound;
        if (static_cast<std::uint64_t>(product) >= threshold) return static_cast<std::uint64_t>(product >> 64);
    }
}

// Unbiased uniform double in [0, 1) from the top 53 bits.
[[nodiscard]] inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

// Uniform k-subset of `items` (order of the result is random).
template <typename T>
[[nodiscard]] std::vector<T> sample_without_replacement(std::vector<T> items, std::size_t k, Rng& rng) {
    k = std::min(k, items.size());
    for (std::size_t i = 0; i < k; ++i) std::swap(items[i], items[i + uniform_below(rng, items.size() - i)]);
    items.resize(k);
    return items;
}

}  // namespace hampat
