#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "groundstate/verify.hpp"

namespace groundstate {

// One grid point of a parameter sweep. Points where the parameters are
// invalid or the existence threshold is violated are marked skipped.
struct SweepRow {
    int n = 0;
    double p = 0, q = 0, omega = 0;
    bool skipped = true;
    CriticalPoints cp{};
    double alpha = 0;
    double alpha_minus_B = 0;
    double c_minus_alpha = 0;
    bool overall = false;
};

struct SweepGrid {
    int n = 3;
    double p = 2, q = 3, omega = 0.1875;
    std::string var;   // one of omega | p | q | n
    double start = 0, stop = 0;
    int count = 0;
};

std::vector<SweepRow> make_grid_rows(const SweepGrid& grid);

// Critical points, ground state and full verification for one grid point.
SweepRow evaluate_row(int n, double p, double q, double omega,
                      const SolverControls& ctl);

// Evaluates all rows; the parallel path distributes rows over OpenMP
// threads, output order is the grid order either way.
std::vector<SweepRow> run_sweep(const SweepGrid& grid, const SolverControls& ctl,
                                bool parallel);

extern const char* const kSweepCsvHeader;

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

// Parses a CSV produced by write_sweep_csv.
std::vector<SweepRow> parse_sweep_csv(std::istream& is);

} // namespace groundstate
