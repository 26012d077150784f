#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace coauth {

/// Derives a task-specific seed from a master seed and a task label, so that
/// adding one seeded computation to a pipeline never perturbs the random
/// stream of another. FNV-1a over the label, mixed with the master seed
/// through a splitmix64 finalizer.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view task) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : task) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::uint64_t z = master ^ h;
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Unbiased draw from [0, bound) via rejection sampling on the engine's raw
/// 64-bit output. Implementation-independent, unlike uniform_int_distribution.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

/// k distinct indices from [0, n), in draw order (partial Fisher-Yates).
inline std::vector<std::uint32_t> sample_without_replacement(std::uint64_t n, std::uint64_t k,
                                                             std::mt19937_64& rng) {
    std::vector<std::uint32_t> pool(n);
    for (std::uint64_t i = 0; i < n; ++i) pool[i] = static_cast<std::uint32_t>(i);
    if (k > n) k = n;
    std::vector<std::uint32_t> out;
    out.reserve(k);
    for (std::uint64_t i = 0; i < k; ++i) {
        std::uint64_t j = i + uniform_index(rng, n - i);
        std::swap(pool[i], pool[j]);
        out.push_back(pool[i]);
    }
    return out;
}

} // namespace coauth
