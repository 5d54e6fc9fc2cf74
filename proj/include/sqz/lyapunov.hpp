#pragma once

#include "sqz/errors.hpp"
#include "sqz/model.hpp"

namespace sqz {

// Symplectic form on (x_a, p_a, x_P, p_P): [x, p] = i per mode.
Mat4 symplectic_form();

// Symmetrized covariance sigma_ij = <v_i v_j + v_j v_i>/2 - <v_i><v_j> of
// the quadrature vector. Vacuum is sigma = I/2. Heisenberg uncertainty
// requires sigma + i Omega / 2 >= 0.
struct CovarianceState {
  Mat4 sigma = Mat4::Identity() / 2.0;

  // Most negative eigenvalue of sigma + i Omega / 2. Physical states give
  // >= 0 up to roundoff (pure states sit exactly at 0).
  double physicality() const;
};

// Stationary covariance of d sigma/dt = f sigma + sigma f^T + d, solved as
// a dense 16x16 Kronecker system. Requires a strictly stable drift (throws
// Error(unstable_regime) with the margin otherwise). The result is
// symmetrized and verified to satisfy the equation to residual <= 1e-10.
Mat4 lyapunov_steady_state(const Mat4& f, const Mat4& d);

}  // namespace sqz
