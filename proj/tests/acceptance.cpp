// Acceptance suite: eleven end-to-end criteria, one pass/fail line each.
// argv[1] is the path to the command-line binary (used by criterion 10).
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "groundstate/sweep.hpp"

using namespace groundstate;

namespace {

const DoublePowerParams canonical(3.0 / 16.0, 2.0, 3.0);
int failures = 0;

template <class Fn>
void criterion(int id, const char* label, Fn&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
        ok = body();
    } catch (const std::exception& e) {
        err = e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    std::printf("[%s] criterion %2d: %s (%.0f ms)%s%s\n", ok ? "PASS" : "FAIL",
                id, label, ms, err.empty() ? "" : " exception: ", err.c_str());
    if (!ok) ++failures;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    criterion(1, "closed-form cross-check of the six critical values", [] {
        const CriticalPoints cf = closed_forms_q2p1(canonical, Dimension(3));
        const CriticalPoints rt = critical_points(canonical, Dimension(3));
        return close(cf.b, 0.25, 1e-12) && close(cf.c, 0.75, 1e-12) &&
               close(cf.beta, 0.40314352, 1e-7) &&
               close(cf.theta, 0.93018981, 1e-7) && close(cf.big_b, 0.5, 1e-12) &&
               close(cf.big_c, 1.5, 1e-12) && close(cf.b, rt.b, 1e-10) &&
               close(cf.c, rt.c, 1e-10) && close(cf.beta, rt.beta, 1e-10) &&
               close(cf.theta, rt.theta, 1e-10) &&
               close(cf.big_b, rt.big_b, 1e-10) && close(cf.big_c, rt.big_c, 1e-10);
    });

    criterion(2, "ordering chain and Sigma sign pattern, 200 random sets", [] {
        const BatchResult res = ordering_scan_batch(200, 20240901, 10000, true);
        return res.total == 200 && res.failures == 0;
    });

    criterion(3, "dimension split of B against beta with stated margins", [] {
        const CriticalPoints n1 = critical_points(canonical, Dimension(1));
        const CriticalPoints n2 = critical_points(canonical, Dimension(2));
        const CriticalPoints n3 = critical_points(canonical, Dimension(3));
        return n1.beta - n1.big_b >= 0.05 &&
               std::abs(n2.big_b - n2.beta) <= 1e-10 &&
               n3.big_b - n3.beta >= 0.09;
    });

    criterion(4, "n = 3 shooting: tight bracket, alpha inside (B, c), stable", [] {
        SolverControls ctl;
        const GroundState gs = find_ground_state(canonical, Dimension(3), ctl);
        SolverControls tight = ctl;
        tight.rtol /= 10.0;
        const GroundState gt = find_ground_state(canonical, Dimension(3), tight);
        return gs.bracket_width <= 1e-8 && gs.alpha - 0.5 >= 1e-3 &&
               0.75 - gs.alpha >= 1e-3 && std::abs(gt.alpha - gs.alpha) < 1e-7;
    });

    criterion(5, "n = 1 maximum equals the conserved-energy zero of F", [] {
        // E(r) = u'^2/2 + F(u) is constant at n = 1 and vanishes at infinity,
        // so F(alpha) = 0 with f(alpha) > 0 at the turning value: the lower
        // zero of F, found independently by root finding.
        const GroundState gs = find_ground_state(canonical, Dimension(1));
        const auto [beta, theta] = zeros_of_F(canonical);
        return eval_f(canonical, gs.alpha) > 0.0 &&
               std::abs(gs.alpha - beta) <= 1e-6;
    });

    criterion(6, "Pohozaev identity residual at dr = 1e-3, 3x under halving", [] {
        const GroundState gs = find_ground_state(canonical, Dimension(3));
        const Trajectory f1 = resample(gs.trajectory, canonical, Dimension(3), 1e-3);
        const Trajectory f2 = resample(gs.trajectory, canonical, Dimension(3), 5e-4);
        const double r1 = identity_residual(f1, canonical, Dimension(3));
        const double r2 = identity_residual(f2, canonical, Dimension(3));
        return r1 <= 1e-4 && r2 * 3.0 <= r1;
    });

    criterion(7, "P positive with one turning point at B for n = 1, 2, 3", [] {
        for (int n : {1, 2, 3}) {
            const GroundState gs = find_ground_state(canonical, Dimension(n));
            const Trajectory fine =
                resample(gs.trajectory, canonical, Dimension(n), 1e-3);
            const PositivityResult pos =
                check_positivity(fine, canonical, Dimension(n));
            const auto [B, C] = zeros_of_Sigma(canonical, Dimension(n));
            if (!pos.is_positive || !pos.structure_ok ||
                std::abs(pos.u_at_r0 - B) > 1e-4)
                return false;
        }
        return true;
    });

    criterion(8, "threshold inequality strict off n = 2, equality at n = 2", [] {
        int valid = 0;
        for (int n : {1, 3, 4, 5}) {
            const double pstar = critical_exponent(Dimension(n));
            for (double p : {1.3, 1.7, 2.1, 2.5, 2.9}) {
                if (!(p < pstar)) continue;
                for (int i = 1; i <= 6; ++i) {
                    const double hi = std::isinf(pstar) ? 2.0 * p + 2.0 : pstar;
                    const double q = p + (hi - p) * i / 7.0;
                    const ThresholdCheck t = threshold_inequality_check(Dimension(n), p, q);
                    if (!t.passed || !(t.lhs < t.rhs)) return false;
                    ++valid;
                }
            }
        }
        const ThresholdCheck t2 = threshold_inequality_check(Dimension(2), 2.0, 3.1);
        return valid >= 99 && t2.passed &&
               std::abs(t2.lhs - t2.rhs) <= 1e-13 * t2.lhs;
    });

    criterion(9, "g strictly decreasing on 100-point grids", [] {
        return g_monotonicity_check(Dimension(3), 2.0, 100) &&
               g_monotonicity_check(Dimension(3), 1.5, 100) &&
               g_monotonicity_check(Dimension(4), 1.5, 100) &&
               g_monotonicity_check(Dimension(1), 2.0, 100);
    });

    criterion(10, "existence dichotomy in the library and the CLI", [&] {
        bool lib_ok = false;
        try {
            zeros_of_F(DoublePowerParams(0.23, 2, 3));
        } catch (const ExistenceError&) {
            lib_ok = true;
        }
        bool shoot_ok = false;
        try {
            find_ground_state(DoublePowerParams(0.23, 2, 3), Dimension(3));
        } catch (const ExistenceError&) {
            shoot_ok = true;
        }
        // At 0.22 the critical points exist and the n = 1 solve is exact
        // (conserved energy); n >= 2 shooting this close to the threshold is
        // outside double-precision reach because alpha sits within e^{-60}
        // of c.
        const auto below = zeros_of_F(DoublePowerParams(0.22, 2, 3));
        const GroundState ok22 =
            find_ground_state(DoublePowerParams(0.22, 2, 3), Dimension(1));
        if (!lib_ok || !shoot_ok || !(below.first > 0.0) || !(ok22.alpha > 0.0))
            return false;
        if (cli.empty()) return false;
        const std::string quiet = " > /dev/null 2>&1";
        const int rc_bad = std::system(
            (cli + " critical-points --omega 0.23" + quiet).c_str());
        const int rc_cp = std::system(
            (cli + " critical-points --omega 0.22" + quiet).c_str());
        const int rc_good = std::system(
            (cli + " shoot --omega 0.22 --n 1" + quiet).c_str());
        if (!WIFEXITED(rc_cp) || WEXITSTATUS(rc_cp) != 0) return false;
        return WIFEXITED(rc_bad) && WEXITSTATUS(rc_bad) == 2 &&
               WIFEXITED(rc_good) && WEXITSTATUS(rc_good) == 0;
    });

    criterion(11, "20-point omega sweep reproduces after a CSV round trip", [] {
        SweepGrid grid;
        grid.var = "omega";
        grid.start = 0.01;
        grid.stop = 0.23;
        grid.count = 20;
        const auto rows = run_sweep(grid, {}, true);
        std::ostringstream os;
        write_sweep_csv(os, rows);
        std::istringstream is(os.str());
        const auto parsed = parse_sweep_csv(is);
        if (parsed.size() != rows.size()) return false;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (parsed[i].skipped != rows[i].skipped) return false;
            if (rows[i].skipped) continue;
            const SweepRow redo = evaluate_row(parsed[i].n, parsed[i].p,
                                               parsed[i].q, parsed[i].omega, {});
            if (std::abs(redo.alpha - parsed[i].alpha) > 1e-9) return false;
            if (std::abs(redo.cp.beta - parsed[i].cp.beta) > 1e-9) return false;
            if (std::abs(redo.cp.big_b - parsed[i].cp.big_b) > 1e-9) return false;
            if (std::abs(redo.alpha_minus_B - parsed[i].alpha_minus_B) > 1e-9)
                return false;
            if (std::abs(redo.c_minus_alpha - parsed[i].c_minus_alpha) > 1e-9)
                return false;
        }
        return true;
    });

    std::printf("%d of 11 criteria passed\n", 11 - failures);
    return failures == 0 ? 0 : 1;
}
