#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace leja {

/// Maximum worker threads used by grid scans. 0 is never returned; the
/// default is the hardware concurrency.
std::size_t max_threads();

/// Set the worker-thread cap. 0 restores the hardware default.
void set_max_threads(std::size_t n);

/// Runs body(i) for i in [0, n). Work is split into contiguous chunks, one
/// per worker. Results must be written to per-index slots by the caller;
/// reductions are then merged in index order, so the outcome does not
/// depend on the schedule.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
    const std::size_t workers = std::min(max_threads(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&body, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : threads) t.join();
}

} // namespace leja
