#include "sqz/lyapunov.hpp"

#include <sstream>

namespace sqz {

Mat4 symplectic_form() {
  Mat4 omega = Mat4::Zero();
  omega(0, 1) = 1.0;
  omega(1, 0) = -1.0;
  omega(2, 3) = 1.0;
  omega(3, 2) = -1.0;
  return omega;
}

double CovarianceState::physicality() const {
  const std::complex<double> ih(0.0, 0.5);
  const Mat4c h =
      sigma.cast<std::complex<double>>() +
      ih * symplectic_form().cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Mat4c> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Mat4 lyapunov_steady_state(const Mat4& f, const Mat4& d) {
  Eigen::EigenSolver<Mat4> es(f, /*computeEigenvectors=*/false);
  const double margin = es.eigenvalues().real().maxCoeff();
  if (!(margin < 0.0)) {
    std::ostringstream os;
    os << "no stationary covariance: max Re eig(f) = " << margin << " >= 0";
    throw Error(ErrorCode::unstable_regime, os.str(), margin);
  }

  // vec(f sigma + sigma f^T) = (I (x) f + f (x) I) vec(sigma), column-major.
  Eigen::Matrix<double, 16, 16> a = Eigen::Matrix<double, 16, 16>::Zero();
  for (int i = 0; i < 4; ++i) a.block<4, 4>(4 * i, 4 * i) += f;  // I (x) f
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) a(4 * i + k, 4 * j + k) += f(i, j);  // f (x) I

  Eigen::Matrix<double, 16, 1> rhs;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) rhs(4 * j + i) = -d(i, j);

  const Eigen::Matrix<double, 16, 1> x =
      Eigen::FullPivLU<Eigen::Matrix<double, 16, 16>>(a).solve(rhs);

  Mat4 sigma;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) sigma(i, j) = x(4 * j + i);
  sigma = ((sigma + sigma.transpose()) / 2.0).eval();

  const double residual =
      (f * sigma + sigma * f.transpose() + d).cwiseAbs().maxCoeff();
  if (!(residual <= 1e-10)) {
    std::ostringstream os;
    os << "stationary covariance residual " << residual << " exceeds 1e-10";
    throw Error(ErrorCode::nonphysical_state, os.str(), residual);
  }
  return sigma;
}

}  // namespace sqz
