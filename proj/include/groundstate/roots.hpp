#pragma once

#include <cmath>
#include <utility>

#include "groundstate/nonlinearity.hpp"

namespace groundstate {

struct RootControls {
    double abs_tol = 1e-12;
    int max_iter = 200;
};

// The six distinguished abscissas: zeros of f (b, c), of F (beta, theta)
// and of Sigma (big_b, big_c; big_c may be +infinity).
struct CriticalPoints {
    double b;
    double c;
    double beta;
    double theta;
    double big_b;
    double big_c;
};

// Safeguarded inverse-quadratic/bisection hybrid on a sign-change bracket.
// A bisection step is forced every other iteration, so the bracket width is
// certified <= abs_tol on return; the midpoint is reported.
template <class F>
double find_root_bracketed(F&& fn, double lo, double hi, RootControls ctl = {}) {
    if (!(lo < hi)) throw BracketError("find_root_bracketed: need lo < hi");
    double a = lo, b = hi;
    double fa = fn(a), fb = fn(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw BracketError("find_root_bracketed: no sign change on bracket");
    double xp = a, fp = fa; // previous point, for inverse quadratic interpolation
    for (int it = 0; it < ctl.max_iter; ++it) {
        const double m = 0.5 * (a + b);
        if (b - a <= ctl.abs_tol) return m;
        double s = m;
        if (it % 2 == 0) {
            if (fp != fa && fp != fb && xp != a && xp != b) {
                s = a * fb * fp / ((fa - fb) * (fa - fp))
                  + b * fa * fp / ((fb - fa) * (fb - fp))
                  + xp * fa * fb / ((fp - fa) * (fp - fb));
            } else if (fb != fa) {
                s = b - fb * (b - a) / (fb - fa);
            }
            const double guard = 0.01 * (b - a);
            if (!(s > a + guard && s < b - guard)) s = m;
        }
        const double fs = fn(s);
        if (fs == 0.0) return s;
        if (fa * fs < 0.0) {
            xp = b; fp = fb;
            b = s; fb = fs;
        } else {
            xp = a; fp = fa;
            a = s; fa = fs;
        }
    }
    throw ConvergenceError("find_root_bracketed: max_iter exceeded");
}

// Two positive zeros of f; independent of the dimension.
std::pair<double, double> zeros_of_f(const DoublePowerParams& params,
                                     RootControls ctl = {});

// Two positive zeros of F; requires omega < omega_{p,q}.
std::pair<double, double> zeros_of_F(const DoublePowerParams& params,
                                     RootControls ctl = {});

// Zeros of Sigma. For tau > 0 both zeros are finite; for tau <= 0 the
// second zero is +infinity and Sigma > 0 on (B, infinity).
std::pair<double, double> zeros_of_Sigma(const DoublePowerParams& params,
                                         Dimension n, RootControls ctl = {});

// All six points via the quadratic substitution t = u^{p-1}; only valid
// when q = 2p-1.
CriticalPoints closed_forms_q2p1(const DoublePowerParams& params, Dimension n);

// All six points via bracketed root-finding.
CriticalPoints critical_points(const DoublePowerParams& params, Dimension n,
                               RootControls ctl = {});

} // namespace groundstate
