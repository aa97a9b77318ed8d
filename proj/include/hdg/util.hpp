#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace hdg {

/* Tuple scans are embarrassingly parallel; results merge in chunk order so
 * reports stay deterministic regardless of thread count. */
inline unsigned& scan_threads() {
    static unsigned n = 1;
    return n;
}

inline void set_scan_threads(unsigned n) {
    scan_threads() = n == 0 ? 1 : n;
}

/* Runs fn(begin, end) over contiguous chunks of [0, total). fn must be safe
 * to call concurrently on disjoint ranges. */
inline void parallel_chunks(std::size_t total,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    unsigned n = scan_threads();
    if (n <= 1 || total < 2 * n) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> workers;
    std::size_t chunk = (total + n - 1) / n;
    for (unsigned t = 0; t < n; ++t) {
        std::size_t lo = t * chunk;
        std::size_t hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&fn, t, lo, hi] { fn(t, lo, hi); });
    }
    for (auto& w : workers) w.join();
}

}  // namespace hdg
