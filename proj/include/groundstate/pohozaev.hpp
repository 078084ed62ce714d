#pragma once

#include "groundstate/shooting.hpp"

namespace groundstate {

// P(r) = r^n [u'^2 + 2F(u)] + (n-2) r^{n-1} u u'.
double eval_P(double r, double u, double du, Dimension n,
              const DoublePowerParams& params);

// Max over interior samples of the normalized mismatch between the centered
// finite difference of P and r^{n-1} Sigma(u(r)). Second order on uniform
// trajectories.
double identity_residual(const Trajectory& traj, const DoublePowerParams& params,
                         Dimension n);

struct PositivityResult {
    bool is_positive;   // P > 0 at all samples past the first
    double min_P;       // minimum of P over the trailing half
    double r0;          // turning radius, where u crosses big_b
    double u_at_r0;     // interpolated u at the turning radius
    int sign_changes;   // sign changes of the sampled increments of P
    bool structure_ok;  // exactly one sign change
};

// Positivity and single-turning-point structure of P along a converged
// ground-state trajectory. The turning radius is located where Sigma(u(r))
// changes sign, i.e. where u crosses big_b.
PositivityResult check_positivity(const Trajectory& traj,
                                  const DoublePowerParams& params, Dimension n);

// P at the first and last sample.
std::pair<double, double> boundary_values(const Trajectory& traj,
                                          const DoublePowerParams& params,
                                          Dimension n);

} // namespace groundstate
