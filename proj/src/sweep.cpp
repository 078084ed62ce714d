#include "groundstate/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace groundstate {

const char* const kSweepCsvHeader =
    "n,p,q,omega,b,c,beta,theta,B,C,alpha,alpha_minus_B,c_minus_alpha,overall";

std::vector<SweepRow> make_grid_rows(const SweepGrid& grid) {
    if (grid.count < 2) throw std::invalid_argument("sweep count must be >= 2");
    std::vector<SweepRow> rows(grid.count);
    for (int i = 0; i < grid.count; ++i) {
        const double value =
            grid.start + (grid.stop - grid.start) * i / (grid.count - 1);
        SweepRow& row = rows[i];
        row.n = grid.n;
        row.p = grid.p;
        row.q = grid.q;
        row.omega = grid.omega;
        if (grid.var == "omega") {
            row.omega = value;
        } else if (grid.var == "p") {
            row.p = value;
        } else if (grid.var == "q") {
            row.q = value;
        } else if (grid.var == "n") {
            row.n = static_cast<int>(std::lround(value));
        } else {
            throw std::invalid_argument("sweep variable must be omega, p, q or n");
        }
    }
    return rows;
}

SweepRow evaluate_row(int n, double p, double q, double omega,
                      const SolverControls& ctl) {
    SweepRow row;
    row.n = n;
    row.p = p;
    row.q = q;
    row.omega = omega;
    try {
        const DoublePowerParams params(omega, p, q);
        const Dimension dim(n);
        if (!params.exists_ground_state) return row;
        const bool closed = std::abs(q - (2.0 * p - 1.0)) < 1e-12;
        row.cp = closed ? closed_forms_q2p1(params, dim)
                        : critical_points(params, dim);
        const VerificationReport rep = full_verification(params, dim, ctl);
        row.alpha = rep.alpha;
        row.alpha_minus_B = row.alpha - row.cp.big_b;
        row.c_minus_alpha = row.cp.c - row.alpha;
        row.overall = rep.overall;
        row.skipped = false;
    } catch (const std::exception&) {
        row.skipped = true;
    }
    return row;
}

std::vector<SweepRow> run_sweep(const SweepGrid& grid, const SolverControls& ctl,
                                bool parallel) {
    std::vector<SweepRow> rows = make_grid_rows(grid);
    const int count = static_cast<int>(rows.size());
#pragma omp parallel for if (parallel) schedule(dynamic)
    for (int i = 0; i < count; ++i)
        rows[i] = evaluate_row(rows[i].n, rows[i].p, rows[i].q, rows[i].omega, ctl);
    return rows;
}

namespace {

std::string num17(double x) {
    if (std::isinf(x)) return "inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << kSweepCsvHeader << "\n";
    for (const auto& row : rows) {
        os << row.n << ',' << num17(row.p) << ',' << num17(row.q) << ','
           << num17(row.omega) << ',';
        if (row.skipped) {
            os << "skipped,skipped,skipped,skipped,skipped,skipped,skipped,"
                  "skipped,skipped,skipped\n";
            continue;
        }
        os << num17(row.cp.b) << ',' << num17(row.cp.c) << ','
           << num17(row.cp.beta) << ',' << num17(row.cp.theta) << ','
           << num17(row.cp.big_b) << ',' << num17(row.cp.big_c) << ','
           << num17(row.alpha) << ',' << num17(row.alpha_minus_B) << ','
           << num17(row.c_minus_alpha) << ','
           << (row.overall ? "true" : "false") << "\n";
    }
}

std::vector<SweepRow> parse_sweep_csv(std::istream& is) {
    std::vector<SweepRow> rows;
    std::string line;
    if (!std::getline(is, line) || line != kSweepCsvHeader)
        throw std::invalid_argument("parse_sweep_csv: bad header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 14)
            throw std::invalid_argument("parse_sweep_csv: bad field count");
        auto num = [](const std::string& s) {
            if (s == "inf") return kInfinity;
            return std::stod(s);
        };
        SweepRow row;
        row.n = std::stoi(fields[0]);
        row.p = num(fields[1]);
        row.q = num(fields[2]);
        row.omega = num(fields[3]);
        if (fields[4] == "skipped") {
            row.skipped = true;
        } else {
            row.skipped = false;
            row.cp.b = num(fields[4]);
            row.cp.c = num(fields[5]);
            row.cp.beta = num(fields[6]);
            row.cp.theta = num(fields[7]);
            row.cp.big_b = num(fields[8]);
            row.cp.big_c = num(fields[9]);
            row.alpha = num(fields[10]);
            row.alpha_minus_B = num(fields[11]);
            row.c_minus_alpha = num(fields[12]);
            row.overall = fields[13] == "true";
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace groundstate
