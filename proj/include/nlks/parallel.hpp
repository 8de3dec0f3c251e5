#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace nlks {

/// Runs fn(i) for i in [0, n) on up to max_threads workers.  Tasks must be
/// independent.  Exceptions are captured per index and the lowest-index one is
/// rethrown after all workers join, so failure behavior does not depend on
/// scheduling.
inline void parallel_run(int n, int max_threads, const std::function<void(int)>& fn) {
    if (n <= 0) return;
    if (max_threads > n) max_threads = n;
    if (max_threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }

    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
    auto worker = [&]() {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(max_threads));
    for (int t = 0; t < max_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
}

} // namespace nlks
