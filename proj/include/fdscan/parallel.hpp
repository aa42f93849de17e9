#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace fdscan::detail {

/// Run fn(i) for every i in [0, count) on up to `threads` workers. Each index
/// runs exactly once; callers write results into per-index slots, which keeps
/// the outcome identical for any thread count. fn must not throw.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(threads, count));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&next, count, &fn] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace fdscan::detail
