#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace apollodom::detail {

/// Runs fn(i) for i in [begin, end) across `threads` workers on statically
/// partitioned contiguous blocks. Callers write to disjoint slots, so the
/// result never depends on the schedule.
template <typename Fn>
void parallel_for(std::size_t begin, std::size_t end, int threads, Fn&& fn) {
    const std::size_t count = end > begin ? end - begin : 0;
    if (count == 0) return;
    const std::size_t workers =
        threads > 1 ? std::min<std::size_t>(static_cast<std::size_t>(threads), count) : 1;
    if (workers == 1) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = begin + w * chunk;
        const std::size_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace apollodom::detail
