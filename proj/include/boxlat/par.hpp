#pragma once

#include <atomic>
#include <cstddef>

namespace boxlat::par {

// Exhaustive predicate scans over index ranges. Each check in the verify
// harness is a scan for the least counterexample; the OpenMP kernel and the
// serial reference must return identical indices (the minimum violating
// index, or n when the property holds everywhere).

template <class Pred>
std::size_t first_violation_serial(std::size_t n, Pred&& holds) {
    for (std::size_t i = 0; i < n; ++i)
        if (!holds(i)) return i;
    return n;
}

template <class Pred>
std::size_t first_violation_parallel(std::size_t n, Pred&& holds) {
    std::atomic<std::size_t> best{n};
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < (long long)n; ++i) {
        std::size_t u = (std::size_t)i;
        if (u >= best.load(std::memory_order_relaxed)) continue;
        if (!holds(u)) {
            std::size_t cur = best.load(std::memory_order_relaxed);
            while (u < cur && !best.compare_exchange_weak(cur, u)) {
            }
        }
    }
    return best.load();
}

// Production entry point: parallel above a small-size threshold.
template <class Pred>
std::size_t first_violation(std::size_t n, Pred&& holds) {
    if (n < 2048) return first_violation_serial(n, holds);
    return first_violation_parallel(n, holds);
}

template <class Pred>
bool all_of(std::size_t n, Pred&& holds) {
    return first_violation(n, holds) == n;
}

}  // namespace boxlat::par
