#include "sqz/langevin.hpp"

#include <cmath>
#include <sstream>

namespace sqz {

LangevinSystem assemble_langevin(const SystemParams& p) {
  const StabilityReport st = stability_check(p);
  if (!st.stable) {
    std::ostringstream os;
    os << "no stationary state: max Re eig(f) = " << st.margin
       << " >= 0; stationary input-output scattering is undefined above "
          "the parametric threshold";
    throw Error(ErrorCode::unstable_regime, os.str(), st.margin);
  }

  LangevinSystem sys;
  sys.params = p;
  sys.drift = ladder_drift(p);
  sys.noise_in = Mat4::Zero();
  sys.noise_in.diagonal() << std::sqrt(p.gamma_a), std::sqrt(p.gamma_a),
      std::sqrt(p.gamma_P), std::sqrt(p.gamma_P);
  sys.margin = st.margin;
  return sys;
}

TransferMatrix output_transfer(const LangevinSystem& sys, double omega) {
  const std::complex<double> iw(0.0, omega);
  Mat4c m = -(sys.drift + iw * Mat4c::Identity());

  Eigen::FullPivLU<Mat4c> lu(m);
  if (std::abs(lu.determinant()) < 1e-14) {
    std::ostringstream os;
    os << "resolvent is singular at omega = " << omega
       << " (|det| = " << std::abs(lu.determinant()) << ")";
    throw Error(ErrorCode::singular_system, os.str());
  }

  const Mat4 l = sys.noise_in;
  TransferMatrix t;
  t.omega = omega;
  // v = -m^{-1} L v_in, out = in + L v  =>  T = I - L m^{-1} L.
  t.T = Mat4c::Identity() +
        l.cast<std::complex<double>>() *
            lu.solve((-l).cast<std::complex<double>>());
  return t;
}

double bogoliubov_defect(const TransferMatrix& t) {
  Mat4c eta = Mat4c::Zero();
  eta.diagonal() << 1.0, -1.0, 1.0, -1.0;
  const Mat4c defect = t.T * eta * t.T.adjoint() - eta;
  return defect.cwiseAbs().maxCoeff();
}

}  // namespace sqz
