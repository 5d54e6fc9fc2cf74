#pragma once

#include <complex>

#include "sqz/errors.hpp"
#include "sqz/model.hpp"

namespace sqz {

// Quantum Langevin system dv/dt = M v - L v_in in the ladder basis
// (a, a^dag, P, P^dag), vacuum white-noise inputs entering through
// L = diag(sqrt(gamma_a), sqrt(gamma_a), sqrt(gamma_P), sqrt(gamma_P)).
// Only assembled for dynamically stable parameter sets: above the
// parametric threshold there is no stationary scattering problem to solve.
struct LangevinSystem {
  SystemParams params;
  Mat4c drift;        // M, damped ladder-basis drift
  Mat4 noise_in;      // L
  double margin = 0;  // max Re eig(f), certified negative on construction
};

// Throws Error(unstable_regime), with the spectral abscissa attached as
// detail(), when the damped drift has a nonnegative growth rate.
LangevinSystem assemble_langevin(const SystemParams& p);

// Input-output scattering at measurement frequency omega (relative to the
// rotating frame):
//   v_out(omega) = T(omega) v_in(omega),   T = I - L m^{-1} L,
//   m = -(M + i omega I),
// using out = in + L v for each port. Row 0 is the cavity-output
// annihilation row (A, B, C, D); row 1 the creation row, equal to
// conj(row 0 at -omega) with the pair swap applied. Rows 2/3 are the same
// pair for the matter-mode output.
struct TransferMatrix {
  double omega = 0.0;
  Mat4c T;
  std::complex<double> A() const { return T(0, 0); }
  std::complex<double> B() const { return T(0, 1); }
  std::complex<double> C() const { return T(0, 2); }
  std::complex<double> D() const { return T(0, 3); }
};

// Throws Error(singular_system) when |det m| < 1e-14. A strictly damped
// stable drift cannot produce a resolvent pole at real omega, so this guard
// only fires for hand-built (e.g. lossless) systems.
TransferMatrix output_transfer(const LangevinSystem& sys, double omega);

// Scattering must preserve the bosonic commutators: T eta T^dag = eta with
// eta = diag(1, -1, 1, -1). Returns the largest absolute entry of the
// defect matrix; machine-precision small for any correctly assembled system.
double bogoliubov_defect(const TransferMatrix& t);

}  // namespace sqz
