#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace fairsect {

/// Thread budget: min(hardware, FAIRSECT_THREADS) with FAIRSECT_THREADS=0
/// meaning "no cap". An explicit request overrides the hardware default.
inline int thread_budget(int requested = 0) {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    int n = requested > 0 ? requested : hw;
    if (const char* env = std::getenv("FAIRSECT_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0) n = std::min(n, cap);
    }
    return std::max(1, n);
}

/// Static block partition of [0, count); results must be written to
/// index-addressed storage so reductions stay deterministic.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    const int n = std::min<std::size_t>(thread_budget(threads), count ? count : 1);
    if (n <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n);
    const std::size_t chunk = (count + n - 1) / n;
    for (int w = 0; w < n; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace fairsect
