// Timing comparison of the serial reference kernels against the OpenMP ones.
// The two paths must produce identical results; the unit tests assert that,
// this tool just reports the speedup.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "isingx/lattices.hpp"
#include "isingx/oracle.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

using namespace isingx;

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double time_of(F&& f, int reps) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = Clock::now();
        f();
        double s = std::chrono::duration<double>(Clock::now() - t0).count();
        if (s < best) best = s;
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    int reps = 3;
    if (argc > 1) reps = std::atoi(argv[1]);

#if defined(_OPENMP)
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run the serial kernel\n");
#endif
    std::printf("%-34s %12s %12s %9s\n", "kernel", "serial [s]", "parallel [s]", "speedup");

    {
        auto lat = oracle::FiniteLattice::make(Preset::Square, 4, 6);
        std::vector<std::uint64_t> serial_out, parallel_out;
        double ts = time_of([&] { serial_out = oracle::enumerate_dos_serial(lat); }, reps);
        double tp = time_of([&] { parallel_out = oracle::enumerate_dos(lat); }, reps);
        std::printf("%-34s %12.4f %12.4f %8.2fx %s\n", "enumerate_dos square 4x6 (V=24)", ts, tp,
                    ts / tp, serial_out == parallel_out ? "" : "MISMATCH");
    }
    {
        auto lat = oracle::FiniteLattice::make(Preset::Triangular, 5, 5);
        std::vector<std::uint64_t> serial_out, parallel_out;
        double ts = time_of([&] { serial_out = oracle::enumerate_dos_serial(lat); }, reps);
        double tp = time_of([&] { parallel_out = oracle::enumerate_dos(lat); }, reps);
        std::printf("%-34s %12.4f %12.4f %8.2fx %s\n", "enumerate_dos triangular 5x5", ts, tp,
                    ts / tp, serial_out == parallel_out ? "" : "MISMATCH");
    }
    {
        LatticeSpec spec = LatticeSpec::preset(Preset::Triangular);
        double vs = 0, vp = 0;
        double ts = time_of(
            [&] { vs = oracle::quadrature_free_energy_serial(spec, 0.05, 1024).value; }, reps);
        double tp =
            time_of([&] { vp = oracle::quadrature_free_energy(spec, 0.05, 1024).value; }, reps);
        std::printf("%-34s %12.4f %12.4f %8.2fx %s\n", "quadrature triangular 1024^2", ts, tp,
                    ts / tp, std::abs(vs - vp) < 1e-12 ? "" : "MISMATCH");
    }
    return 0;
}
