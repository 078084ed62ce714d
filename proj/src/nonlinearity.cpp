#include "groundstate/nonlinearity.hpp"

#include <cmath>
#include <cstdlib>

namespace groundstate {

double pow_pos(double x, double e) {
    const double r = std::round(e);
    if (std::abs(e - r) < 1e-12 && std::abs(r) <= 64.0) {
        long k = static_cast<long>(r);
        const bool negative = k < 0;
        k = std::labs(k);
        double base = x;
        double acc = 1.0;
        while (k > 0) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return negative ? 1.0 / acc : acc;
    }
    return std::pow(x, e);
}

Dimension::Dimension(int n_) : n(n_) {
    if (n < 1) throw std::invalid_argument("dimension must satisfy n >= 1");
}

DoublePowerParams::DoublePowerParams(double omega_, double p_, double q_)
    : omega(omega_), p(p_), q(q_) {
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
    if (!(p > 1.0)) throw std::invalid_argument("p must exceed 1");
    if (!(q > p)) throw std::invalid_argument("q must exceed p");
    omega_pq = existence_threshold(p, q);
    exists_ground_state = omega < omega_pq;
}

double existence_threshold(double p, double q) {
    if (!(1.0 < p && p < q)) throw std::invalid_argument("need 1 < p < q");
    const double lead = 2.0 * (q - p) / ((p + 1.0) * (q - 1.0));
    const double base = (p - 1.0) * (q + 1.0) / ((p + 1.0) * (q - 1.0));
    return lead * pow_pos(base, (p - 1.0) / (q - p));
}

double critical_exponent(Dimension dim) {
    if (dim.n <= 2) return kInfinity;
    return static_cast<double>(dim.n + 2) / static_cast<double>(dim.n - 2);
}

PohozaevCoeffs pohozaev_coeffs(Dimension dim, double p, double q) {
    if (!(1.0 < p && p < q)) throw std::invalid_argument("need 1 < p < q");
    const double n = static_cast<double>(dim.n);
    return {n / (p + 1.0) - (n - 2.0) / 2.0, n / (q + 1.0) - (n - 2.0) / 2.0};
}

double sigma_threshold(const PohozaevCoeffs& coeffs, double p, double q) {
    if (!(coeffs.tau > 0.0))
        throw UnsupportedCaseError(
            "sigma_threshold requires tau > 0 (q < p*(n)); the threshold is infinite otherwise");
    const double lead = coeffs.sigma * (q - p) / (q - 1.0);
    const double base = coeffs.sigma * (p - 1.0) / (coeffs.tau * (q - 1.0));
    return lead * pow_pos(base, (p - 1.0) / (q - p));
}

double single_power_bound(Dimension dim, double p) {
    if (!(p > 1.0 && p < critical_exponent(dim)))
        throw std::invalid_argument("need 1 < p < p*(n)");
    const double n = static_cast<double>(dim.n);
    const double denom = 2.0 * n - (n - 2.0) * (p + 1.0);
    return pow_pos(2.0 * (p + 1.0) / denom, 1.0 / (p - 1.0));
}

double lemma_g(Dimension dim, double p, double q_var) {
    const double pstar = critical_exponent(dim);
    if (!(p > 1.0 && p < pstar)) throw std::invalid_argument("need 1 < p < p*(n)");
    if (!(q_var > 0.0 && q_var < pstar))
        throw std::invalid_argument("need 0 < q < p*(n)");
    const double n = static_cast<double>(dim.n);
    const double base = 4.0 / (2.0 * n - (n - 2.0) * (p + 1.0));
    const double factor = 2.0 * n - (n - 2.0) * (q_var + 1.0);
    return pow_pos(base, q_var) * pow_pos(factor, p - 1.0);
}

double eval_f(const DoublePowerParams& params, double u) {
    if (u < 0.0) throw std::domain_error("eval_f requires u >= 0");
    return -params.omega * u + pow_pos(u, params.p) - pow_pos(u, params.q);
}

double eval_F(const DoublePowerParams& params, double u) {
    if (u < 0.0) throw std::domain_error("eval_F requires u >= 0");
    return -0.5 * params.omega * u * u
         + pow_pos(u, params.p + 1.0) / (params.p + 1.0)
         - pow_pos(u, params.q + 1.0) / (params.q + 1.0);
}

double eval_Sigma(const DoublePowerParams& params, Dimension n, double u) {
    if (u < 0.0) throw std::domain_error("eval_Sigma requires u >= 0");
    const PohozaevCoeffs c = pohozaev_coeffs(n, params.p, params.q);
    return -2.0 * params.omega * u * u
         + 2.0 * c.sigma * pow_pos(u, params.p + 1.0)
         - 2.0 * c.tau * pow_pos(u, params.q + 1.0);
}

} // namespace groundstate
