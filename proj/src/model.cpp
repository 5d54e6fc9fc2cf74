#include "sqz/model.hpp"

#include <cmath>
#include <complex>

namespace sqz {

namespace {

using namespace std::complex_literals;

Mat4 loss_diag(const SystemParams& p) {
  Mat4 g = Mat4::Zero();
  g.diagonal() << p.gamma_a, p.gamma_a, p.gamma_P, p.gamma_P;
  return g;
}

}  // namespace

Mat4c dynamical_matrix(const SystemParams& p) {
  const double d = p.delta_a();
  const double g = p.g_eff();
  const double w = p.W;
  Mat4c k = Mat4c::Zero();
  // i dv/dt = K v for v = (a, a^dag, P, P^dag); the coupling
  // i g (a^dag - a)(P^dag + P) mixes the pairs with the signs below.
  k(0, 0) = d;
  k(0, 2) = 1i * g;
  k(0, 3) = 1i * g;
  k(1, 1) = -d;
  k(1, 2) = 1i * g;
  k(1, 3) = 1i * g;
  k(2, 0) = -1i * g;
  k(2, 1) = 1i * g;
  k(2, 2) = w;
  k(3, 0) = 1i * g;
  k(3, 1) = -1i * g;
  k(3, 3) = -w;
  return k;
}

Mat4c ladder_drift(const SystemParams& p) {
  // dv/dt = -i K v - (gamma/2) v = M v (Hamiltonian part plus decay).
  Mat4c m = -1i * dynamical_matrix(p);
  m -= (loss_diag(p) / 2.0).cast<std::complex<double>>();
  return m;
}

Mat4 coupling_block(double g, double phase) {
  const double c = std::cos(phase), s = std::sin(phase);
  Mat4 m = Mat4::Zero();
  // H_c = 2 g (p_a cos - x_a sin) x_P:
  //   dx_a/dt += dH/dp_a,  dp_a/dt -= dH/dx_a,  dp_P/dt -= dH/dx_P.
  m(0, 2) = 2.0 * g * c;
  m(1, 2) = 2.0 * g * s;
  m(3, 0) = 2.0 * g * s;
  m(3, 1) = -2.0 * g * c;
  return m;
}

Mat4 hamiltonian_drift(const SystemParams& p) {
  const double d = p.delta_a();
  const double w = p.W;
  Mat4 a = Mat4::Zero();
  a(0, 1) = d;
  a(1, 0) = -d;
  a(2, 3) = w;
  a(3, 2) = -w;
  return a + coupling_block(p.g_eff(), 0.0);
}

DriftDiffusion drift_diffusion(const SystemParams& p) {
  DriftDiffusion dd;
  dd.f = hamiltonian_drift(p) - loss_diag(p) / 2.0;
  dd.d = loss_diag(p) / 2.0;
  return dd;
}

PolaritonBranches polariton_frequencies(const SystemParams& p) {
  const double d = p.delta_a();
  const double w = p.W;
  const double g = p.g_eff();
  const double s = d * d + w * w;
  const double disc =
      (d * d - w * w) * (d * d - w * w) + 16.0 * g * g * d * w;

  PolaritonBranches b;
  if (disc >= 0.0) {
    const double r = std::sqrt(disc);
    const double lo2 = (s - r) / 2.0;
    const double hi2 = (s + r) / 2.0;
    if (lo2 >= -1e-15) {
      b.lower = std::sqrt(std::max(lo2, 0.0));
      b.upper = std::sqrt(std::max(hi2, 0.0));
      b.stable = true;
    } else {
      // One squared frequency negative: a pure imaginary normal mode.
      b.lower = 0.0;
      b.upper = std::sqrt(std::max(hi2, 0.0));
      b.stable = false;
    }
  } else {
    // Complex-conjugate pair of squared frequencies: parametric
    // instability. Report the common real part of the principal roots.
    const std::complex<double> z(s / 2.0, std::sqrt(-disc) / 2.0);
    const double re = std::sqrt(z).real();
    b.lower = re;
    b.upper = re;
    b.stable = false;
  }
  return b;
}

StabilityReport stability_check(const SystemParams& p) {
  const Mat4 f = drift_diffusion(p).f;
  Eigen::EigenSolver<Mat4> es(f, /*computeEigenvectors=*/false);
  StabilityReport r;
  r.margin = es.eigenvalues().real().maxCoeff();
  r.stable = r.margin < 0.0;
  return r;
}

}  // namespace sqz
