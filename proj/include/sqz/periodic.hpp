#pragma once

#include "sqz/lyapunov.hpp"

namespace sqz {

// Quadrature drift of the fully time-modulated model in the frame rotating
// at omega_G. The lab coupling G(t) = G0 + Gmod cos(omega_G t) splits into
// the static co-rotating block (the effective model) plus blocks
// oscillating at omega_G (from G0) and at 2 omega_G (the counter-rotating
// half of the modulation):
//   f(t) = f_eff + coupling_block(G0, omega_G t)
//               + coupling_block(g_cr, 2 omega_G t),
// so the one-period time average of f(t) equals the effective drift
// exactly (the oscillating blocks integrate to zero).
struct PeriodicDrift {
  SystemParams params;

  double period() const;    // 2 pi / omega_G
  Mat4 at(double t) const;  // full drift f(t)
  Mat4 effective() const;   // static part = exact period average
  Mat4 diffusion() const;   // vacuum diffusion, time independent
};

struct PropagationPlan {
  double dt = 0.0;          // RK4 step; must satisfy dt <= period / 50
  double transient = 0.0;   // settle time before the averaging window
  int average_periods = 0;  // 0: no averaging window
  double physicality_tol = 1e-8;
};

struct PropagationResult {
  Mat4 sigma_final;
  Mat4 sigma_average;              // mean over the window (if requested)
  double t_final = 0.0;
  double worst_physicality = 0.0;  // most negative uncertainty eigenvalue seen
};

// Fixed-step RK4 for d sigma/dt = f(t) sigma + sigma f(t)^T + d starting
// from sigma0 at t = 0. Total run time is transient (rounded up to whole
// steps) plus average_periods full periods; sigma_average is the mean of
// the post-step covariances over that final window. Enforces the step
// bound (Error(step_too_large)) and checks the uncertainty relation after
// every step (Error(nonphysical_state) when violated beyond
// plan.physicality_tol).
PropagationResult periodic_propagation(const PeriodicDrift& pd,
                                       const Mat4& sigma0,
                                       const PropagationPlan& plan);

// Quantitative check of the time-averaging (rotating-wave) step: propagate
// the fully modulated model into its periodic steady regime (transient
// 10/min(gamma), dt = period/64), average over the last 10 periods, and
// compare against the stationary covariance of the static effective model:
//   deviation = max_ij |sigma_avg - sigma_eff|
//               / max(max_ij |sigma_eff|, 1/2).
// Passes when deviation <= threshold (0.02). Throws Error(unstable_regime)
// when the effective model has no stationary state — the comparison target
// does not exist, which is itself a failed validation.
struct RwaReport {
  double deviation = 0.0;
  double threshold = 0.02;
  bool pass = false;
  Mat4 sigma_avg;
  Mat4 sigma_eff;
};
RwaReport rwa_validate(const SystemParams& p);

}  // namespace sqz
