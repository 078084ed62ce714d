#pragma once

#include <random>
#include <string>
#include <vector>

#include "groundstate/pohozaev.hpp"

namespace groundstate {

struct Check {
    std::string name;
    bool passed;
    double lhs;
    double rhs;
    double margin;
};

struct VerificationReport {
    double omega, p, q;
    int n;
    CriticalPoints critical_points{};
    double alpha = 0.0;
    std::vector<Check> checks;
    bool overall = false;
};

// Critical points, the ground state, and the ordering/bound checks:
// b < beta < c < theta, beta < alpha < c, big_b < alpha, and the
// dimension split of big_b against beta.
VerificationReport ordering_report(const DoublePowerParams& params, Dimension n,
                                   const SolverControls& ctl = {});

struct ThresholdCheck {
    bool passed;
    double lhs; // omega_{p,q}
    double rhs; // omega_{sigma,tau,p,q}
};

// Strict inequality for n != 2, equality to 1e-13 relative for n = 2.
ThresholdCheck threshold_inequality_check(Dimension n, double p, double q);

// Strict decrease of lemma_g over a q grid in (p, p*(n)), plus g(q) < g(p).
bool g_monotonicity_check(Dimension n, double p, int grid_size);

// Ordering checks, Sigma sign-pattern scan, Pohozaev identity residual,
// positivity/turning point and boundary values, aggregated into one report.
VerificationReport full_verification(const DoublePowerParams& params, Dimension n,
                                     const SolverControls& ctl = {});

// A random parameter point with omega in (0.2, 0.95) of the existence
// threshold and q capped below min(2p+2, p*(n)).
struct SampledPoint {
    int n;
    double p, q, omega;
};
SampledPoint sample_valid_point(std::mt19937_64& rng, const std::vector<int>& dims);

struct BatchResult {
    int total;
    int failures;
};

// Ordering-chain plus Sigma sign-pattern scan over `count` random points.
// The parallel path distributes points across OpenMP threads; each point is
// seeded independently so serial and parallel runs agree exactly.
BatchResult ordering_scan_batch(int count, unsigned long long seed,
                                int scan_points, bool parallel);

// Sign-pattern scan of Sigma over (0, hi): negative on (0, big_b), positive
// on (big_b, big_c), negative beyond when big_c is finite. Points within
// `guard` of a zero are skipped.
bool sigma_sign_pattern_ok(const DoublePowerParams& params, Dimension n,
                           double big_b, double big_c, double hi, int points,
                           double guard);

} // namespace groundstate
