#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace compser {

// Static block partition of [begin, end) over `threads` workers. Results
// must be written to disjoint pre-sized storage indexed by the loop
// variable, which makes the outcome independent of the thread count.
inline void parallel_for(std::int64_t begin, std::int64_t end, int threads,
                         const std::function<void(std::int64_t)>& body) {
    const std::int64_t count = end - begin;
    if (count <= 0) return;
    if (threads < 1) threads = 1;
    const auto nthreads = static_cast<std::int64_t>(
        std::min<std::int64_t>(threads, count));
    if (nthreads == 1) {
        for (std::int64_t k = begin; k < end; ++k) body(k);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    const std::int64_t chunk = (count + nthreads - 1) / nthreads;
    for (std::int64_t t = 0; t < nthreads; ++t) {
        const std::int64_t lo = begin + t * chunk;
        const std::int64_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::int64_t k = lo; k < hi; ++k) body(k);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace compser
