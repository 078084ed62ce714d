#include "groundstate/pohozaev.hpp"

#include <cmath>
#include <limits>

namespace groundstate {

double eval_P(double r, double u, double du, Dimension dim,
              const DoublePowerParams& params) {
    if (!(r > 0.0)) throw std::invalid_argument("eval_P requires r > 0");
    const double n = static_cast<double>(dim.n);
    const double rn1 = pow_pos(r, n - 1.0);
    return r * rn1 * (du * du + 2.0 * eval_F(params, std::max(u, 0.0)))
         + (n - 2.0) * rn1 * u * du;
}

double identity_residual(const Trajectory& traj, const DoublePowerParams& params,
                         Dimension dim) {
    const auto& s = traj.samples;
    if (s.size() < 3)
        throw std::invalid_argument("identity_residual: need at least 3 samples");
    const double n = static_cast<double>(dim.n);
    double worst = 0.0;
    double P_prev = eval_P(s[0].r, s[0].u, s[0].du, dim, params);
    double P_mid = eval_P(s[1].r, s[1].u, s[1].du, dim, params);
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        const double P_next = eval_P(s[i + 1].r, s[i + 1].u, s[i + 1].du, dim, params);
        const double fd = (P_next - P_prev) / (s[i + 1].r - s[i - 1].r);
        const double rhs = pow_pos(s[i].r, n - 1.0)
                         * eval_Sigma(params, dim, std::max(s[i].u, 0.0));
        worst = std::max(worst, std::abs(fd - rhs) / (1.0 + std::abs(rhs)));
        P_prev = P_mid;
        P_mid = P_next;
    }
    return worst;
}

PositivityResult check_positivity(const Trajectory& traj,
                                  const DoublePowerParams& params, Dimension dim) {
    const auto& s = traj.samples;
    if (s.size() < 3)
        throw std::invalid_argument("check_positivity: need at least 3 samples");
    const auto [big_b, big_c] = zeros_of_Sigma(params, dim);
    (void)big_c;

    PositivityResult res{};
    res.is_positive = true;
    res.min_P = std::numeric_limits<double>::infinity();
    res.r0 = std::numeric_limits<double>::quiet_NaN();
    res.u_at_r0 = std::numeric_limits<double>::quiet_NaN();

    // Turning point from the sign change of Sigma(u(r)): u is monotone on a
    // ground state, so this is the radius where u crosses big_b.
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i].u >= big_b && s[i + 1].u < big_b) {
            const double t = (s[i].u - big_b) / (s[i].u - s[i + 1].u);
            res.r0 = s[i].r + t * (s[i + 1].r - s[i].r);
            res.u_at_r0 = s[i].u + t * (s[i + 1].u - s[i].u);
            break;
        }
    }

    double prev_P = eval_P(s[0].r, s[0].u, s[0].du, dim, params);
    int last_sign = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        const double P = eval_P(s[i].r, s[i].u, s[i].du, dim, params);
        if (P <= 0.0) res.is_positive = false;
        if (s[i].r > 0.5 * traj.r_end) res.min_P = std::min(res.min_P, P);
        const double dP = P - prev_P;
        const int sign = dP > 0.0 ? 1 : (dP < 0.0 ? -1 : 0);
        if (sign != 0) {
            if (last_sign != 0 && sign != last_sign) ++res.sign_changes;
            last_sign = sign;
        }
        prev_P = P;
    }
    res.structure_ok = res.sign_changes == 1;
    return res;
}

std::pair<double, double> boundary_values(const Trajectory& traj,
                                          const DoublePowerParams& params,
                                          Dimension dim) {
    const auto& s = traj.samples;
    if (s.empty()) throw std::invalid_argument("boundary_values: empty trajectory");
    return {eval_P(s.front().r, s.front().u, s.front().du, dim, params),
            eval_P(s.back().r, s.back().u, s.back().du, dim, params)};
}

} // namespace groundstate
