#include "leja/parallel.hpp"

#include <atomic>

namespace leja {

namespace {
std::atomic<std::size_t> g_max_threads{0};
}

std::size_t max_threads() {
    const std::size_t n = g_max_threads.load(std::memory_order_relaxed);
    if (n > 0) return n;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void set_max_threads(std::size_t n) {
    g_max_threads.store(n, std::memory_order_relaxed);
}

} // namespace leja
