#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace coauth {

/// Worker count for parallel sections. COAUTH_THREADS overrides hardware
/// concurrency; values < 1 fall back to 1.
inline std::size_t thread_count() {
    if (const char* env = std::getenv("COAUTH_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<std::size_t>(v);
        return 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Runs fn(i) for i in [0, n). Each index must be independent of the others
/// (no shared mutable state), which makes the result identical for any
/// worker count.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    std::size_t workers = thread_count();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (workers > n) workers = n;
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

/// Splits [0, n) into fixed-size chunks, evaluates chunks in parallel, and
/// hands each result to reduce() in ascending chunk order. Because the chunk
/// layout and the reduction order do not depend on the worker count,
/// floating-point accumulations come out bit-identical whether run on one
/// thread or many. Chunks are processed in bounded waves so at most a few
/// chunk results are alive at once.
template <class ChunkFn, class ReduceFn>
void chunked_reduce(std::size_t n, std::size_t chunk_size, ChunkFn&& run_chunk, ReduceFn&& reduce) {
    if (n == 0) return;
    if (chunk_size == 0) chunk_size = 1;
    const std::size_t n_chunks = (n + chunk_size - 1) / chunk_size;
    const std::size_t wave = std::max<std::size_t>(1, thread_count() * 2);
    using Result = decltype(run_chunk(std::size_t{0}, std::size_t{0}));
    for (std::size_t base = 0; base < n_chunks; base += wave) {
        const std::size_t count = std::min(wave, n_chunks - base);
        std::vector<Result> results(count);
        parallel_for(count, [&](std::size_t i) {
            std::size_t c = base + i;
            std::size_t lo = c * chunk_size;
            std::size_t hi = lo + chunk_size < n ? lo + chunk_size : n;
            results[i] = run_chunk(lo, hi);
        });
        for (std::size_t i = 0; i < count; ++i) reduce(results[i]);
    }
}

} // namespace coauth
