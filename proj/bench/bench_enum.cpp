// Compares the serial reference enumeration against the incremental
// OpenMP kernel on the full weight-distribution sweep.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "cccforge/codes.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    uint32_t p = argc > 1 ? uint32_t(std::atoi(argv[1])) : 5;
    uint32_t m = argc > 2 ? uint32_t(std::atoi(argv[2])) : 5;
    uint32_t alpha = argc > 3 ? uint32_t(std::atoi(argv[3])) : 1;

    cccforge::ExtField field(p, m);
    std::printf("p=%u m=%u q=%llu alpha=%u\n", p, m,
                (unsigned long long)field.q(), alpha);

    auto t0 = std::chrono::steady_clock::now();
    const auto ref = cccforge::weight_distribution_reference(field, alpha);
    const double t_ref = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto serial = cccforge::weight_distribution(field, alpha, 1);
    const double t_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto parallel = cccforge::weight_distribution(field, alpha, 0);
    const double t_parallel = seconds_since(t0);

    if (ref.weights != serial.weights || serial.weights != parallel.weights) {
        std::printf("MISMATCH between paths\n");
        return 1;
    }

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("[n=%llu k=%u d=%llu]\n", (unsigned long long)ref.n, ref.k,
                (unsigned long long)ref.d);
    std::printf("naive reference      : %8.3f s\n", t_ref);
    std::printf("incremental, 1 thread: %8.3f s  (%.1fx vs naive)\n", t_serial,
                t_ref / t_serial);
    std::printf("incremental, %2d thr  : %8.3f s  (%.1fx vs naive)\n", threads,
                t_parallel, t_ref / t_parallel);
    return 0;
}
