#include "sqz/periodic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace sqz {

namespace {

Mat4 uncertainty_part(const Mat4& sigma, double& min_eig) {
  const std::complex<double> ih(0.0, 0.5);
  const Mat4c h = sigma.cast<std::complex<double>>() +
                  ih * symplectic_form().cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Mat4c> es(h, Eigen::EigenvaluesOnly);
  min_eig = es.eigenvalues().minCoeff();
  return sigma;
}

}  // namespace

double PeriodicDrift::period() const {
  return 2.0 * std::numbers::pi / params.omega_G;
}

Mat4 PeriodicDrift::effective() const { return drift_diffusion(params).f; }

Mat4 PeriodicDrift::diffusion() const { return drift_diffusion(params).d; }

Mat4 PeriodicDrift::at(double t) const {
  const double wg = params.omega_G;
  // Counter-rotating half of the cosine modulation: same amplitude as the
  // static effective block, twice the modulation frequency.
  const double g_cr = params.g_eff();
  return effective() + coupling_block(params.G0, wg * t) +
         coupling_block(g_cr, 2.0 * wg * t);
}

PropagationResult periodic_propagation(const PeriodicDrift& pd,
                                       const Mat4& sigma0,
                                       const PropagationPlan& plan) {
  const double period = pd.period();
  if (!(plan.dt > 0.0)) {
    throw Error(ErrorCode::step_too_large, "dt must be positive");
  }
  if (plan.dt > period / 50.0 * (1.0 + 1e-9)) {
    std::ostringstream os;
    os << "dt = " << plan.dt << " exceeds period/50 = " << period / 50.0
       << "; the modulation would be under-resolved";
    throw Error(ErrorCode::step_too_large, os.str());
  }

  const double dt = plan.dt;
  const Mat4 d = pd.diffusion();
  auto rhs = [&](double t, const Mat4& s) -> Mat4 {
    const Mat4 f = pd.at(t);
    return f * s + s * f.transpose() + d;
  };

  const std::size_t n_tr = static_cast<std::size_t>(
      std::ceil(plan.transient / dt - 1e-12));
  const std::size_t n_avg = static_cast<std::size_t>(
      std::llround(plan.average_periods * period / dt));
  const std::size_t n_total = n_tr + n_avg;

  Mat4 s = sigma0;
  Mat4 acc = Mat4::Zero();
  double t = 0.0;
  double worst = 0.0;
  {
    double e0;
    uncertainty_part(s, e0);
    worst = e0;
  }

  for (std::size_t k = 0; k < n_total; ++k) {
    const Mat4 k1 = rhs(t, s);
    const Mat4 k2 = rhs(t + dt / 2.0, s + (dt / 2.0) * k1);
    const Mat4 k3 = rhs(t + dt / 2.0, s + (dt / 2.0) * k2);
    const Mat4 k4 = rhs(t + dt, s + dt * k3);
    s += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += dt;

    double e;
    uncertainty_part(s, e);
    worst = std::min(worst, e);
    if (e < -plan.physicality_tol) {
      std::ostringstream os;
      os << "covariance violated the uncertainty bound at t = " << t
         << " (min eig(sigma + i Omega/2) = " << e << ")";
      throw Error(ErrorCode::nonphysical_state, os.str(), e);
    }

    if (k >= n_tr) acc += s;
  }

  PropagationResult res;
  res.sigma_final = s;
  res.sigma_average =
      n_avg > 0 ? Mat4(acc / static_cast<double>(n_avg)) : s;
  res.t_final = t;
  res.worst_physicality = worst;
  return res;
}

RwaReport rwa_validate(const SystemParams& p) {
  const StabilityReport st = stability_check(p);
  if (!st.stable) {
    std::ostringstream os;
    os << "effective model has no stationary state (max Re eig(f) = "
       << st.margin << "); the time-averaged comparison target does not "
          "exist";
    throw Error(ErrorCode::unstable_regime, os.str(), st.margin);
  }

  const DriftDiffusion dd = drift_diffusion(p);
  const Mat4 sigma_eff = lyapunov_steady_state(dd.f, dd.d);

  PeriodicDrift pd{p};
  PropagationPlan plan;
  plan.dt = pd.period() / 64.0;
  plan.transient = 10.0 / std::min(p.gamma_a, p.gamma_P);
  plan.average_periods = 10;
  const PropagationResult pr =
      periodic_propagation(pd, Mat4::Identity() / 2.0, plan);

  RwaReport r;
  r.sigma_avg = pr.sigma_average;
  r.sigma_eff = sigma_eff;
  const double scale = std::max(sigma_eff.cwiseAbs().maxCoeff(), 0.5);
  r.deviation = (pr.sigma_average - sigma_eff).cwiseAbs().maxCoeff() / scale;
  r.pass = r.deviation <= r.threshold;
  return r;
}

}  // namespace sqz
