// Timing comparison of the serial and OpenMP paths of the batch kernels.

#include <chrono>
#include <cstdio>

#include "groundstate/sweep.hpp"
#include "groundstate/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

} // namespace

int main() {
    using namespace groundstate;

    {
        const int count = 400;
        auto t0 = Clock::now();
        const BatchResult serial = ordering_scan_batch(count, 1234, 10000, false);
        const double ts = seconds_since(t0);
        t0 = Clock::now();
        const BatchResult par = ordering_scan_batch(count, 1234, 10000, true);
        const double tp = seconds_since(t0);
        std::printf("ordering_scan_batch (%d points): serial %.3fs, openmp %.3fs, "
                    "speedup %.2fx, failures %d/%d\n",
                    count, ts, tp, ts / tp, serial.failures, par.failures);
    }

    {
        SweepGrid grid;
        grid.var = "omega";
        grid.start = 0.01;
        grid.stop = 0.22;
        grid.count = 24;
        const SolverControls ctl;
        auto t0 = Clock::now();
        const auto serial = run_sweep(grid, ctl, false);
        const double ts = seconds_since(t0);
        t0 = Clock::now();
        const auto par = run_sweep(grid, ctl, true);
        const double tp = seconds_since(t0);
        int mismatches = 0;
        for (std::size_t i = 0; i < serial.size(); ++i)
            if (serial[i].alpha != par[i].alpha) ++mismatches;
        std::printf("run_sweep (%d rows): serial %.3fs, openmp %.3fs, "
                    "speedup %.2fx, mismatches %d\n",
                    grid.count, ts, tp, ts / tp, mismatches);
    }
    return 0;
}
