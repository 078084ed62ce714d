#pragma once

#include <array>
#include <vector>

#include "groundstate/roots.hpp"

namespace groundstate {

struct TrajectorySample {
    double r;
    double u;
    double du;
};

struct Trajectory {
    std::vector<TrajectorySample> samples; // radii strictly increasing
    double r_start = 0.0;
    double r_end = 0.0;
    int dim_n = 0;
};

enum class ShootClass { Overshoot, Undershoot, Converged };

struct ShootOutcome {
    ShootClass cls;
    double event_radius; // zero crossing (Overshoot) or turning radius (Undershoot)
};

struct SolverControls {
    double rtol = 1e-10;
    double atol = 1e-12;
    double r_max = 200.0;
    double h0_scale = 1e-4;   // series-start offset as a fraction of c
    double h_max = 0.05;      // step cap, keeps dense resampling accurate
    double alpha_tol = 1e-10; // bisection bracket width target
    double u_floor = 1e-8;    // acceptance floor for Converged
};

struct GroundState {
    double alpha;          // u(0) = max value
    Trajectory trajectory; // integration at the final bracket midpoint
    double bracket_width;
    int iterations;
    double decay_rate;
};

// Second-order series start at r = h0 from u(0) = alpha, u'(0) = 0,
// using u''(0) = -f(alpha)/n. Returns (r, u, du).
std::array<double, 3> step_off_origin(const DoublePowerParams& params, Dimension n,
                                      double alpha, double h0);

// Adaptive Dormand-Prince 5(4) integration of the radial system with
// overshoot/undershoot/converged classification at accepted steps.
std::pair<Trajectory, ShootOutcome> integrate(const DoublePowerParams& params,
                                              Dimension n, double alpha,
                                              const SolverControls& ctl = {});

// Bisection on alpha over (b, c) against the overshoot/undershoot dichotomy.
GroundState find_ground_state(const DoublePowerParams& params, Dimension n,
                              const SolverControls& ctl = {});

// Least-squares decay slope over the trailing half of the trajectory.
// Fits log(u r^{(n-1)/2}) against r so the geometric spreading factor does
// not bias the estimate at moderate radii; expected near -sqrt(omega).
double decay_rate(const Trajectory& traj);

// Uniform resampling at spacing dr via quintic Hermite interpolation, using
// the ODE for the nodal accelerations.
Trajectory resample(const Trajectory& traj, const DoublePowerParams& params,
                    Dimension n, double dr);

} // namespace groundstate
