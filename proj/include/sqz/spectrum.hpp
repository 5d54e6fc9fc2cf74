#pragma once

#include <vector>

#include "sqz/langevin.hpp"

namespace sqz {

// Which output port the quadrature is measured on.
enum class OutputMode { cavity, matter };

// One point of the stationary symmetrized output quadrature noise spectrum,
// normalized so vacuum = 1 (0 dB). Values below 1 are squeezed.
struct NoiseSpectrum {
  double omega_prime = 0.0;  // measurement frequency relative to the frame
  double theta = 0.0;        // quadrature angle
  double s_linear = 1.0;
  double s_db = 0.0;
};

double to_db(double s_linear);

// S(omega', theta) for the output quadrature
//   X_theta = (a_out e^{-i theta} + a_out^dag e^{i theta}) / sqrt(2).
// With vacuum inputs the symmetrized spectrum reduces to
//   S = || e^{-i theta} row_op(omega') + e^{+i theta} row_opdag(omega') ||^2 / 2
// over the scattering rows of the selected port. The form is manifestly
// positive; evenness in omega' follows from the rows being partners under
// omega -> -omega conjugation. Expanding the square gives the equivalent
//   S = 1 + n(omega') + n(-omega') + 2 Re(e^{-2 i theta} F(omega'))
// with n = |B|^2 + |D|^2 and F(omega') = A(omega')B(-omega') +
// C(omega')D(-omega'), which is what the time-domain oracle computes.
double spectrum_from_transfer(const TransferMatrix& t, double theta,
                              OutputMode mode = OutputMode::cavity);

double quadrature_spectrum(const LangevinSystem& sys, double omega,
                           double theta, OutputMode mode = OutputMode::cavity);

// Dense grid evaluation, rows ordered omega-major with theta varying
// fastest, matching the CSV export layout. One linear solve per frequency,
// shared across all angles; deterministic for any thread count.
std::vector<NoiseSpectrum> quadrature_spectrum(
    const LangevinSystem& sys, const std::vector<double>& omegas,
    const std::vector<double>& thetas, OutputMode mode = OutputMode::cavity,
    int threads = 1);

// At fixed omega' the spectrum is a pure sinusoid in 2 theta:
//   S(theta) = c0 + 2 Re(e^{-2 i theta} F),
// so the extremal angles follow in closed form from arg F and the extremal
// values are c0 -+ 2|F|. Angles are normalized to [0, pi);
// theta_max - theta_min = pi/2 (mod pi) always.
struct OptimalAngle {
  double theta_min = 0.0;
  double s_min = 1.0;
  double theta_max = 0.0;
  double s_max = 1.0;
};
OptimalAngle optimal_angle(const LangevinSystem& sys, double omega,
                           OutputMode mode = OutputMode::cavity);

}  // namespace sqz
