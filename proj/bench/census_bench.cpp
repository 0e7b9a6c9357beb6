// Compares the serial reference census against the OpenMP-sharded one and
// reports the speedup, double-checking that both agree entry for entry.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "zigzag/enumerate.hpp"
#include "zigzag/int128.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace zigzag;

namespace {

template <typename Fn>
double timed(const Fn& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int max_n = argc > 1 ? std::atoi(argv[1]) : 12;
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("peak-set census, serial reference vs %d-thread sharded run\n", threads);
    std::printf("%4s %12s %12s %10s %9s %7s\n", "n", "E_n", "peak sets", "serial", "parallel",
                "speedup");
    for (int n = 8; n <= max_n; ++n) {
        Census serial, parallel;
        double t_serial = timed([&] { serial = peak_set_census(n); });
        double t_parallel = timed([&] { parallel = peak_set_census_parallel(n); });
        if (serial.entries != parallel.entries || serial.total != parallel.total) {
            std::printf("n=%d: serial and parallel censuses DISAGREE\n", n);
            return 1;
        }
        std::printf("%4d %12s %12zu %9.3fs %8.3fs %6.2fx\n", n, to_string(serial.total).c_str(),
                    serial.entries.size(), t_serial, t_parallel, t_serial / t_parallel);
    }
    return 0;
}
