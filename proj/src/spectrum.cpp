#include "sqz/spectrum.hpp"

#include <cmath>
#include <numbers>

#include "sqz/pool.hpp"

namespace sqz {

namespace {

constexpr double kPi = std::numbers::pi;

// Row pair (op, op^dag) of the selected output port.
inline int base_row(OutputMode mode) {
  return mode == OutputMode::cavity ? 0 : 2;
}

// c0 and F of S(theta) = c0 + 2 Re(e^{-2 i theta} F) at this frequency.
void sinusoid_coefficients(const TransferMatrix& t, OutputMode mode,
                           double& c0, std::complex<double>& f) {
  const int r = base_row(mode);
  const Vec4c r1 = t.T.row(r);
  const Vec4c r2 = t.T.row(r + 1);
  c0 = (r1.squaredNorm() + r2.squaredNorm()) / 2.0;
  // Eigen's dot conjugates its first argument: r2.dot(r1) = sum conj(r2) r1.
  f = 0.5 * r2.dot(r1);
}

}  // namespace

double to_db(double s_linear) { return 10.0 * std::log10(s_linear); }

double spectrum_from_transfer(const TransferMatrix& t, double theta,
                              OutputMode mode) {
  const int r = base_row(mode);
  const std::complex<double> em = std::polar(1.0, -theta);
  const std::complex<double> ep = std::polar(1.0, theta);
  const Vec4c v = em * t.T.row(r).transpose() + ep * t.T.row(r + 1).transpose();
  return v.squaredNorm() / 2.0;
}

double quadrature_spectrum(const LangevinSystem& sys, double omega,
                           double theta, OutputMode mode) {
  return spectrum_from_transfer(output_transfer(sys, omega), theta, mode);
}

std::vector<NoiseSpectrum> quadrature_spectrum(
    const LangevinSystem& sys, const std::vector<double>& omegas,
    const std::vector<double>& thetas, OutputMode mode, int threads) {
  const std::size_t nw = omegas.size();
  const std::size_t nt = thetas.size();
  std::vector<NoiseSpectrum> rows(nw * nt);

  parallel_for(nw, threads, [&](std::size_t i) {
    const TransferMatrix t = output_transfer(sys, omegas[i]);
    for (std::size_t j = 0; j < nt; ++j) {
      NoiseSpectrum& r = rows[i * nt + j];
      r.omega_prime = omegas[i];
      r.theta = thetas[j];
      r.s_linear = spectrum_from_transfer(t, thetas[j], mode);
      r.s_db = to_db(r.s_linear);
    }
  });
  return rows;
}

OptimalAngle optimal_angle(const LangevinSystem& sys, double omega,
                           OutputMode mode) {
  const TransferMatrix t = output_transfer(sys, omega);
  double c0;
  std::complex<double> f;
  sinusoid_coefficients(t, mode, c0, f);

  auto wrap = [](double th) {
    th = std::fmod(th, kPi);
    if (th < 0) th += kPi;
    return th;
  };

  OptimalAngle oa;
  const double arg = std::arg(f);  // arg(0) = 0: flat spectra pick theta 0
  oa.theta_max = wrap(arg / 2.0);
  oa.theta_min = wrap(arg / 2.0 + kPi / 2.0);
  oa.s_max = c0 + 2.0 * std::abs(f);
  oa.s_min = c0 - 2.0 * std::abs(f);
  return oa;
}

}  // namespace sqz
