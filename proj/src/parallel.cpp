#include "scm/parallel.hpp"

#include <atomic>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace scm {

namespace {
std::atomic<int> g_threads{0}; // 0 = library default
}

int worker_threads() {
    int n = g_threads.load();
    if (n > 0) return n;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_worker_threads(int n) {
    g_threads = n;
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#endif
}

namespace detail {

std::optional<std::size_t> first_failure(
    std::size_t n, const std::function<bool(std::size_t)>& pred) {
#ifdef _OPENMP
    if (worker_threads() > 1 && n > 1) {
        std::atomic<std::size_t> best{n};
#pragma omp parallel for schedule(dynamic, 1)
        for (std::size_t i = 0; i < n; ++i) {
            if (i >= best.load(std::memory_order_relaxed)) continue;
            if (!pred(i)) {
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
        if (best.load() < n) return best.load();
        return std::nullopt;
    }
#endif
    for (std::size_t i = 0; i < n; ++i)
        if (!pred(i)) return i;
    return std::nullopt;
}

} // namespace detail

} // namespace scm
