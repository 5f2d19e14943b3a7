// Compares the serial sweep reference against the OpenMP path and reports
// timings, plus the same comparison for the brute-force direction scan.

#include <chrono>
#include <cstdio>
#include <thread>

#include "qcorr/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

bool identical(const std::vector<qcorr::MeasureRecord>& a,
               const std::vector<qcorr::MeasureRecord>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].consonance != b[i].consonance || a[i].uin != b[i].uin ||
            a[i].flags != b[i].flags)
            return false;
    return true;
}

} // namespace

int main() {
    const unsigned hw = std::max(2u, std::thread::hardware_concurrency());
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel path runs serially\n");
#endif

    qcorr::SweepSpec spec = qcorr::figure_preset("fig3").spec;
    spec.t_hawking_values.resize(60);

    double t0 = now_seconds();
    const auto serial = qcorr::run_sweep_serial(spec);
    const double serial_s = now_seconds() - t0;

    t0 = now_seconds();
    const auto parallel = qcorr::run_sweep(spec, static_cast<int>(hw));
    const double parallel_s = now_seconds() - t0;

    std::printf("sweep (%zu points): serial %.3fs, %u workers %.3fs, speedup %.2fx, equal: %s\n",
                serial.size(), serial_s, hw, parallel_s, serial_s / parallel_s,
                identical(serial, parallel) ? "yes" : "NO");

    // brute-force direction scan on a degenerate-marginal state (full grid)
    const qcorr::DensityMatrix rho =
        qcorr::gisin_state(qcorr::GisinParams(0.5, 0.7853981633974483));
    t0 = now_seconds();
    const double u1 = qcorr::uin_bruteforce(rho, 200000, 1);
    const double scan1_s = now_seconds() - t0;
    t0 = now_seconds();
    const double u2 = qcorr::uin_bruteforce(rho, 200000, static_cast<int>(hw));
    const double scan2_s = now_seconds() - t0;
    std::printf("direction scan (200000 dirs): serial %.3fs, %u workers %.3fs, speedup %.2fx, "
                "equal: %s\n",
                scan1_s, hw, scan2_s, scan1_s / scan2_s, u1 == u2 ? "yes" : "NO");
    return 0;
}
