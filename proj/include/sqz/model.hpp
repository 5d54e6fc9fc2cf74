#pragma once

#include <Eigen/Dense>

#include "sqz/params.hpp"

namespace sqz {

using Mat2 = Eigen::Matrix2d;
using Mat2c = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4d;
using Mat4c = Eigen::Matrix4cd;
using Vec4c = Eigen::Vector4cd;

// Lossless Bogoliubov generator K in the ladder basis v = (a, a^dag, P,
// P^dag): i dv/dt = K v for the static effective Hamiltonian. K carries the
// particle-hole symmetry Sigma K Sigma = -conj(K), where Sigma swaps each
// (op, op^dag) pair, and reduces to diag(delta_a, -delta_a, W, -W) at g = 0.
Mat4c dynamical_matrix(const SystemParams& p);

// Damped ladder-basis drift M (adds -gamma/2 to each mode's diagonal), so
// that dv/dt = M v - L v_in with L = diag(sqrt(gamma_a), sqrt(gamma_a),
// sqrt(gamma_P), sqrt(gamma_P)) and vacuum white-noise inputs v_in.
Mat4c ladder_drift(const SystemParams& p);

// Hamiltonian part of the quadrature drift in the basis (x_a, p_a, x_P,
// p_P) with x = (a + a^dag)/sqrt(2), p = -i(a - a^dag)/sqrt(2).
Mat4 hamiltonian_drift(const SystemParams& p);

// Quadrature-basis drift contribution of one coupling term
//   i g (a^dag e^{i phase} - a e^{-i phase})(P^dag + P)
//     = 2 g (p_a cos(phase) - x_a sin(phase)) x_P.
// phase = 0 is the static effective coupling block; the time-dependent
// blocks of the fully modulated drift reuse this with running phases.
Mat4 coupling_block(double g, double phase);

// Quadrature-basis drift/diffusion pair of the damped effective model:
// d sigma/dt = f sigma + sigma f^T + d, with d the vacuum-input diffusion
// diag(gamma_a, gamma_a, gamma_P, gamma_P)/2. sigma = I/2 is the exact
// fixed point when the coupling vanishes.
struct DriftDiffusion {
  Mat4 f;
  Mat4 d;
};
DriftDiffusion drift_diffusion(const SystemParams& p);

// Normal-mode frequencies of the lossless effective model,
//   Omega^2 = [(delta^2 + W^2) +- sqrt((delta^2 - W^2)^2
//              + 16 g^2 delta W)] / 2.
// `stable` is true iff both roots are real and nonnegative (all eigenvalues
// of K real). For red detuning (delta_a < 0) the discriminant is negative
// for every g > 0 and the lossless model is parametrically unstable; the
// branch values then report the real parts of the principal square roots,
// useful only for display.
struct PolaritonBranches {
  double lower = 0.0;
  double upper = 0.0;
  bool stable = true;
};
PolaritonBranches polariton_frequencies(const SystemParams& p);

// Spectral abscissa of the damped quadrature drift. A stationary state
// exists iff margin = max Re eig(f) < 0. Reports, never throws: callers
// that require stationarity are the ones that refuse.
struct StabilityReport {
  bool stable = false;
  double margin = 0.0;
};
StabilityReport stability_check(const SystemParams& p);

}  // namespace sqz
