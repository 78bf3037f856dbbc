// Times the OpenMP kernels against the serial reference implementations and
// cross-checks their outputs while at it. Maps must agree exactly (identical
// per-entry accumulation order); reductions agree to roundoff.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <vector>

#include <omp.h>

#include "csym/kernels.hpp"
#include "csym/linalg.hpp"

using namespace csym;

namespace {

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        double t0 = omp_get_wtime();
        f();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

void row(const char* name, std::size_t n, double serial_s, double parallel_s, double err) {
    std::printf("%-20s %6zu  %12.3f %12.3f %8.2fx  %9.2e\n", name, n, serial_s * 1e3,
                parallel_s * 1e3, serial_s / parallel_s, err);
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    std::vector<std::size_t> sizes =
        quick ? std::vector<std::size_t>{64, 128} : std::vector<std::size_t>{128, 256, 512, 768};
    const int reps = quick ? 2 : 3;

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-20s %6s  %12s %12s %9s  %9s\n", "kernel", "n", "serial(ms)", "openmp(ms)",
                "speedup", "diff");

    for (std::size_t n : sizes) {
        CMatrix a = random_gaussian(n, 1);
        CMatrix b = random_gaussian(n, 2);

        CMatrix c_par, c_ser;
        double tp = time_best_of(reps, [&] { c_par = multiply(a, b); });
        double ts = time_best_of(reps, [&] { c_ser = serial::multiply(a, b); });
        row("multiply", n, ts, tp, frobenius_distance(c_par, c_ser));

        CMatrix h_par, h_ser;
        tp = time_best_of(reps, [&] { h_par = adjoint(a); });
        ts = time_best_of(reps, [&] { h_ser = serial::adjoint(a); });
        row("adjoint", n, ts, tp, frobenius_distance(h_par, h_ser));

        double f_par = 0.0, f_ser = 0.0;
        tp = time_best_of(reps, [&] { f_par = frobenius_distance(a, b); });
        ts = time_best_of(reps, [&] { f_ser = serial::frobenius_distance(a, b); });
        row("frobenius_distance", n, ts, tp, std::abs(f_par - f_ser));
    }
    return 0;
}
