#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace y00 {

/// 0 (or negative) means "use the hardware thread count".
inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

/// Reduction over [0, n) in fixed-size chunks. Chunk boundaries depend only
/// on (n, chunk_size) and partial results merge in chunk order, so the result
/// is identical for every worker count, including floating-point sums.
///
/// chunk_fn(begin, end) -> R; merge(acc, part) -> R.
template <class R, class ChunkFn, class MergeFn>
R parallel_reduce(std::uint64_t n, std::uint64_t chunk_size, R init, ChunkFn chunk_fn,
                  MergeFn merge, int workers) {
    if (n == 0) return init;
    if (chunk_size == 0) chunk_size = 1;
    const std::uint64_t num_chunks = (n + chunk_size - 1) / chunk_size;
    const int nw = std::min<std::uint64_t>(std::uint64_t(resolve_workers(workers)), num_chunks);

    std::vector<R> parts(num_chunks, init);
    if (nw <= 1) {
        for (std::uint64_t ci = 0; ci < num_chunks; ++ci) {
            const std::uint64_t b = ci * chunk_size;
            parts[ci] = chunk_fn(b, std::min(n, b + chunk_size));
        }
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(std::size_t(nw));
        for (int w = 0; w < nw; ++w) {
            pool.emplace_back([&] {
                for (std::uint64_t ci = next.fetch_add(1); ci < num_chunks;
                     ci = next.fetch_add(1)) {
                    const std::uint64_t b = ci * chunk_size;
                    parts[ci] = chunk_fn(b, std::min(n, b + chunk_size));
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    R acc = init;
    for (std::uint64_t ci = 0; ci < num_chunks; ++ci) acc = merge(acc, parts[ci]);
    return acc;
}

/// Side-effect version: body(begin, end) runs once per chunk. The caller's
/// writes must target disjoint ranges.
template <class Body>
void parallel_for(std::uint64_t n, std::uint64_t chunk_size, Body body, int workers) {
    parallel_reduce<int>(
        n, chunk_size, 0,
        [&](std::uint64_t b, std::uint64_t e) {
            body(b, e);
            return 0;
        },
        [](int, int) { return 0; }, workers);
}

}  // namespace y00
