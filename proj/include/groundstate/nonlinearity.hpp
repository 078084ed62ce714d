#pragma once

#include <limits>

#include "groundstate/errors.hpp"

namespace groundstate {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// x^e for x >= 0. Integer exponents (to 1e-12) are computed by repeated
// multiplication so that algebraically equal expressions agree to a few ulps.
double pow_pos(double x, double e);

struct Dimension {
    int n;
    explicit Dimension(int n_);
};

// Coefficients of the trinomial form
//   Sigma(u) = -2 omega u^2 + 2 sigma u^{p+1} - 2 tau u^{q+1}.
struct PohozaevCoeffs {
    double sigma;
    double tau;
};

// The triple (omega, p, q) defining f(u) = -omega u + u^p - u^q.
// Validates omega > 0, 1 < p < q and caches the existence threshold.
struct DoublePowerParams {
    double omega;
    double p;
    double q;
    double omega_pq;             // existence threshold for (p, q)
    bool exists_ground_state;    // omega < omega_pq

    DoublePowerParams(double omega_, double p_, double q_);
};

// omega_{p,q}: the largest omega for which F attains positive values.
double existence_threshold(double p, double q);

// p*(n): infinity for n = 1, 2 and (n+2)/(n-2) for n >= 3.
double critical_exponent(Dimension n);

PohozaevCoeffs pohozaev_coeffs(Dimension n, double p, double q);

// Threshold for Sigma to have the sign pattern (-,+,-); requires tau > 0.
double sigma_threshold(const PohozaevCoeffs& coeffs, double p, double q);

// sigma_{n,p}: unique positive zero of Sigma_1 for the single-power
// nonlinearity f_1(u) = -u + u^p. Requires 1 < p < p*(n).
double single_power_bound(Dimension n, double p);

// g(q) = [4/(2n-(n-2)(p+1))]^q [2n-(n-2)(q+1)]^{p-1}, the decreasing
// auxiliary function behind the threshold inequality.
double lemma_g(Dimension n, double p, double q_var);

double eval_f(const DoublePowerParams& params, double u);
double eval_F(const DoublePowerParams& params, double u);
double eval_Sigma(const DoublePowerParams& params, Dimension n, double u);

} // namespace groundstate
