#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ggrey::detail {

// Static block partition of [0, n) over hardware threads. The partition is a
// pure function of n, so results that depend only on per-index work are
// reproducible regardless of the thread count.
inline void parallel_for(std::int64_t n,
                         const std::function<void(std::int64_t, std::int64_t)>& run_chunk) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::int64_t n_threads = std::min<std::int64_t>(hw, 32);
    if (n < 2048 || n_threads == 1) {
        run_chunk(0, n);
        return;
    }
    const std::int64_t per = (n + n_threads - 1) / n_threads;
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex err_mutex;
    for (std::int64_t t = 0; t < n_threads; ++t) {
        const std::int64_t lo = t * per;
        const std::int64_t hi = std::min(n, lo + per);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                run_chunk(lo, hi);
            } catch (...) {
                std::scoped_lock lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace ggrey::detail
