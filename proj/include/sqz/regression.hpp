#pragma once

#include <vector>

#include "sqz/params.hpp"
#include "sqz/spectrum.hpp"

namespace sqz {

// Time-domain route to the same stationary symmetrized output spectra as
// the frequency-domain solver, kept algorithmically independent so the two
// can cross-check each other:
//   - stationary covariance from the Lyapunov equation,
//   - two-time correlations from the regression property
//     <dv(t + tau) dv(t)^T> evolving with e^{f tau} on the stationary state,
//   - input-output cross terms, which for vacuum inputs collapse into the
//     sigma - I/2 offset of the cavity-block correlations,
//   - a dense Simpson quadrature of e^{i omega tau} against the correlation
//     functions on tau in [0, 20/min(gamma)] (no FFT; the tau grid is
//     chosen for accuracy, not speed).
// Rows come out in the same omega-major order as the frequency solver.
// Throws Error(unstable_regime) when no stationary state exists — exactly
// the same refusal the frequency route gives.
std::vector<NoiseSpectrum> output_spectrum_regression(
    const SystemParams& p, const std::vector<double>& omegas,
    const std::vector<double>& thetas, int threads = 1);

}  // namespace sqz
