#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

namespace primepat {

/// Worker count from a hint; 0 means "all hardware threads".
inline unsigned resolve_workers(unsigned hint) {
    if (hint > 0) return hint;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Splits [0, count) into `workers` contiguous chunks and runs
/// fn(worker_index, begin, end) on each, one thread per chunk. Results
/// stay worker-count independent as long as callers merge per-chunk output
/// in chunk order.
template <class Fn>
void parallel_chunks(std::uint64_t count, unsigned workers, Fn&& fn) {
    workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, count)));
    if (workers <= 1) {
        fn(0u, std::uint64_t{0}, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t base = count / workers;
    const std::uint64_t extra = count % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t len = base + (w < extra ? 1 : 0);
        pool.emplace_back([&fn, w, begin, len] { fn(w, begin, begin + len); });
        begin += len;
    }
    for (auto& t : pool) t.join();
}

}  // namespace primepat
