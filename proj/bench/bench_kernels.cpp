// Timing comparison between the serial reference kernels and the
// OpenMP-parallel ones, plus a link-scan workload at the check level.
// Run with OMP_NUM_THREADS or --jobs to vary the worker count.

#include <chrono>
#include <iostream>

#include "scm/generators.hpp"
#include "scm/linalg.hpp"
#include "scm/parallel.hpp"
#include "scm/scm_checks.hpp"

using namespace scm;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

IntMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    IntMatrix m = IntMatrix::zero(rows, cols);
    for (auto& x : m.data) x = rng.next_int(-2, 2);
    return m;
}

template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = Clock::now();
        fn();
        best = std::min(best, ms_since(t0));
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    int jobs = 0;
    for (int i = 1; i + 1 < argc + 1; ++i) {
        std::string arg = argv[i] ? argv[i] : "";
        if (arg == "--jobs" && i + 1 < argc) jobs = std::atoi(argv[i + 1]);
    }
    if (jobs > 0) set_worker_threads(jobs);
    std::cout << "worker threads: " << worker_threads() << "\n\n";

    Rng rng(42);
    std::cout << "rank kernels (serial reference vs OpenMP), best of 3:\n";
    for (std::size_t n : {64u, 128u, 256u, 384u}) {
        IntMatrix m = random_matrix(n, n, rng);
        std::size_t r_serial = 0, r_parallel = 0;
        double t_serial = time_best_of(
            3, [&] { r_serial = rank_mod_p_serial(m, 1000003); });
        double t_parallel =
            time_best_of(3, [&] { r_parallel = rank_mod_p(m, 1000003); });
        std::cout << "  rank_mod_p      " << n << "x" << n << ": serial "
                  << t_serial << " ms, parallel " << t_parallel
                  << " ms (rank " << r_serial << ", agree "
                  << (r_serial == r_parallel ? "yes" : "NO") << ")\n";

        double tq_serial =
            time_best_of(3, [&] { r_serial = rank_rational_serial(m); });
        double tq_parallel =
            time_best_of(3, [&] { r_parallel = rank_rational(m); });
        std::cout << "  rank_rational   " << n << "x" << n << ": serial "
                  << tq_serial << " ms, parallel " << tq_parallel
                  << " ms (rank " << r_serial << ", agree "
                  << (r_serial == r_parallel ? "yes" : "NO") << ")\n";
    }

    std::cout << "\ncheck-level fan-out (is_SCM_links over every link):\n";
    for (int n : {6, 7, 8}) {
        SimplicialComplex cx = generate_random_complex(n, 0.55, 7 + n);
        auto t0 = Clock::now();
        ScmVerdict v = is_SCM_links(cx, CoefficientSpec::integers());
        std::cout << "  n=" << n << " (" << cx.facet_count()
                  << " facets): " << ms_since(t0) << " ms, verdict "
                  << (v.ok ? "true" : "false") << "\n";
    }
    return 0;
}
