#include "groundstate/roots.hpp"

#include <cmath>
#include <functional>

namespace groundstate {

namespace {

// All three reduced functions f/u, F/u^2, Sigma/(2u^2) have the shape
// "-omega + unimodal": negative at 0+, a single interior maximum at u_star,
// negative again at infinity. Finds both sign changes around u_star.
std::pair<double, double> two_roots(const std::function<double(double)>& fn,
                                    double u_star, RootControls ctl,
                                    const char* what) {
    if (!(fn(u_star) > 0.0))
        throw NoPositivePartError(std::string(what) + ": function has no positive part");
    double lo = u_star * 1e-8;
    for (int i = 0; i < 50 && !(fn(lo) < 0.0); ++i) lo *= 0.5;
    if (!(fn(lo) < 0.0))
        throw BracketError(std::string(what) + ": could not bracket lower root");
    const double lower = find_root_bracketed(fn, lo, u_star, ctl);
    double hi = 2.0 * u_star;
    int doublings = 0;
    while (fn(hi) >= 0.0 && doublings++ < 200) hi *= 2.0;
    if (fn(hi) >= 0.0)
        throw BracketError(std::string(what) + ": could not bracket upper root");
    const double upper = find_root_bracketed(fn, u_star, hi, ctl);
    return {lower, upper};
}

constexpr double kTauZeroTol = 1e-13;

} // namespace

std::pair<double, double> zeros_of_f(const DoublePowerParams& params, RootControls ctl) {
    const double p = params.p, q = params.q, omega = params.omega;
    auto reduced = [&](double u) {
        return -omega + pow_pos(u, p - 1.0) - pow_pos(u, q - 1.0);
    };
    const double u_star = pow_pos((p - 1.0) / (q - 1.0), 1.0 / (q - p));
    return two_roots(reduced, u_star, ctl, "zeros_of_f");
}

std::pair<double, double> zeros_of_F(const DoublePowerParams& params, RootControls ctl) {
    if (!params.exists_ground_state)
        throw ExistenceError("zeros_of_F: omega >= omega_{p,q}, F has no positive part");
    const double p = params.p, q = params.q, omega = params.omega;
    auto reduced = [&](double u) {
        return -0.5 * omega + pow_pos(u, p - 1.0) / (p + 1.0)
                            - pow_pos(u, q - 1.0) / (q + 1.0);
    };
    const double u_star =
        pow_pos(((p - 1.0) / (p + 1.0)) / ((q - 1.0) / (q + 1.0)), 1.0 / (q - p));
    return two_roots(reduced, u_star, ctl, "zeros_of_F");
}

std::pair<double, double> zeros_of_Sigma(const DoublePowerParams& params,
                                         Dimension n, RootControls ctl) {
    if (!params.exists_ground_state)
        throw ExistenceError("zeros_of_Sigma: omega >= omega_{p,q}");
    const double p = params.p, q = params.q, omega = params.omega;
    const PohozaevCoeffs co = pohozaev_coeffs(n, p, q);
    auto reduced = [&](double u) {
        return -omega + co.sigma * pow_pos(u, p - 1.0) - co.tau * pow_pos(u, q - 1.0);
    };
    if (co.tau > kTauZeroTol) {
        const double u_star =
            pow_pos(co.sigma * (p - 1.0) / (co.tau * (q - 1.0)), 1.0 / (q - p));
        return two_roots(reduced, u_star, ctl, "zeros_of_Sigma");
    }
    if (std::abs(co.tau) <= kTauZeroTol) {
        // Sigma/(2u^2) = -omega + sigma u^{p-1}: single zero, positive beyond.
        return {pow_pos(omega / co.sigma, 1.0 / (p - 1.0)), kInfinity};
    }
    // tau < 0: the reduced function rises from -omega to +infinity with a
    // single sign change regardless of the sign of sigma.
    double lo = 1.0;
    for (int i = 0; i < 1200 && !(reduced(lo) < 0.0); ++i) lo *= 0.5;
    if (!(reduced(lo) < 0.0))
        throw BracketError("zeros_of_Sigma: could not bracket lower endpoint");
    double hi = std::max(1.0, 2.0 * lo);
    int doublings = 0;
    while (reduced(hi) <= 0.0 && doublings++ < 200) hi *= 2.0;
    if (reduced(hi) <= 0.0)
        throw BracketError("zeros_of_Sigma: could not bracket upper endpoint");
    return {find_root_bracketed(reduced, lo, hi, ctl), kInfinity};
}

CriticalPoints closed_forms_q2p1(const DoublePowerParams& params, Dimension n) {
    const double p = params.p, q = params.q, omega = params.omega;
    if (std::abs(q - (2.0 * p - 1.0)) >= 1e-12)
        throw UnsupportedCaseError("closed_forms_q2p1: requires q = 2p-1");
    if (!params.exists_ground_state)
        throw ExistenceError("closed_forms_q2p1: omega >= omega_{p,q}");
    const double e = 1.0 / (p - 1.0);
    const double s = std::sqrt(1.0 - 4.0 * omega);
    const double t = std::sqrt(1.0 - (p + 1.0) * (p + 1.0) * omega / p);
    CriticalPoints cp{};
    cp.b = pow_pos(0.5 * (1.0 - s), e);
    cp.c = pow_pos(0.5 * (1.0 + s), e);
    cp.beta = pow_pos(p / (p + 1.0) * (1.0 - t), e);
    cp.theta = pow_pos(p / (p + 1.0) * (1.0 + t), e);
    const PohozaevCoeffs co = pohozaev_coeffs(n, p, q);
    if (co.tau > kTauZeroTol) {
        const double disc = co.sigma * co.sigma - 4.0 * omega * co.tau;
        const double d = std::sqrt(disc);
        cp.big_b = pow_pos((co.sigma - d) / (2.0 * co.tau), e);
        cp.big_c = pow_pos((co.sigma + d) / (2.0 * co.tau), e);
    } else if (std::abs(co.tau) <= kTauZeroTol) {
        cp.big_b = pow_pos(omega / co.sigma, e);
        cp.big_c = kInfinity;
    } else {
        const double d = std::sqrt(co.sigma * co.sigma + 4.0 * omega * (-co.tau));
        cp.big_b = pow_pos((-co.sigma + d) / (2.0 * (-co.tau)), e);
        cp.big_c = kInfinity;
    }
    return cp;
}

CriticalPoints critical_points(const DoublePowerParams& params, Dimension n,
                               RootControls ctl) {
    CriticalPoints cp{};
    std::tie(cp.b, cp.c) = zeros_of_f(params, ctl);
    std::tie(cp.beta, cp.theta) = zeros_of_F(params, ctl);
    std::tie(cp.big_b, cp.big_c) = zeros_of_Sigma(params, n, ctl);
    return cp;
}

} // namespace groundstate
