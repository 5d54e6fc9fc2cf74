#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "sqz/langevin.hpp"
#include "sqz/model.hpp"
#include "sqz/spectrum.hpp"

using namespace sqz;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTheta1 = kPi / 6.0;
constexpr double kTheta2 = 2.0 * kPi / 3.0;

SystemParams benchmark(double gmod, double delta_a) {
  SystemParams p;
  p.omega_a = 1.0;
  p.omega_G = 1.0 - delta_a;
  p.W = 0.1;
  p.G0 = 0.0;
  p.Gmod = gmod;
  p.gamma_a = 0.1;
  p.gamma_P = 1.0 / 300.0;
  return p;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  return v;
}

double point(const SystemParams& p, double w, double th,
             OutputMode mode = OutputMode::cavity) {
  const LangevinSystem sys = assemble_langevin(p);
  return spectrum_from_transfer(output_transfer(sys, w), th, mode);
}

}  // namespace

TEST_CASE("spectrum values at the benchmark operating points") {
  CHECK(std::abs(point(benchmark(0.04, 0.1), +0.0912, kTheta1) -
                 0.490938724061) <= 1e-9);
  CHECK(std::abs(point(benchmark(0.04, 0.1), -0.0912, kTheta1) -
                 0.490938724061) <= 1e-9);
  CHECK(std::abs(point(benchmark(0.01, 0.1), +0.0987, kTheta1) -
                 0.854172485438) <= 1e-9);
  CHECK(std::abs(point(benchmark(0.01, 0.1), +0.1225, kTheta2) -
                 0.986520529660) <= 1e-9);
  CHECK(std::abs(point(benchmark(0.05, 0.0), +0.1071, kTheta2) -
                 0.494313644298) <= 1e-9);
  CHECK(std::abs(point(benchmark(0.05, 0.1), -0.0861, kTheta1) -
                 0.436060905103) <= 1e-9);
}

TEST_CASE("zero modulation leaves every quadrature at the vacuum level") {
  SystemParams p = benchmark(0.0, 0.1);
  p.G0 = 0.02;
  const LangevinSystem sys = assemble_langevin(p);
  const auto rows = quadrature_spectrum(sys, linspace(-0.3, 0.3, 201),
                                        {0.0, kTheta1, kTheta2, 1.3},
                                        OutputMode::cavity, 1);
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, std::abs(r.s_linear - 1.0));
  CHECK(worst <= 1e-12);
}

TEST_CASE("quadrature angle is pi-periodic") {
  const LangevinSystem sys = assemble_langevin(benchmark(0.04, 0.1));
  for (double w : {-0.11, 0.0, 0.0912, 0.23}) {
    const TransferMatrix t = output_transfer(sys, w);
    for (double th : {0.0, 0.4, kTheta1, 2.9}) {
      const double a = spectrum_from_transfer(t, th);
      const double b = spectrum_from_transfer(t, th + kPi);
      CHECK(std::abs(a - b) <= 1e-12);
    }
  }
}

TEST_CASE("spectra are even in the measurement frequency") {
  for (auto [gmod, da] : {std::pair{0.05, 0.0}, {0.04, 0.1}}) {
    const LangevinSystem sys = assemble_langevin(benchmark(gmod, da));
    for (double w : linspace(0.01, 0.3, 30)) {
      for (double th : {kTheta1, kTheta2}) {
        const double sp = spectrum_from_transfer(output_transfer(sys, w), th);
        const double sm = spectrum_from_transfer(output_transfer(sys, -w), th);
        CHECK(std::abs(sp - sm) <= 1e-12);
      }
    }
  }
}

TEST_CASE("orthogonal quadratures obey the uncertainty sum rule") {
  // S(theta) + S(theta + pi/2) = 2 (1 + n(w) + n(-w)) >= 2, with equality
  // exactly when the port adds no excitation. Sampled over random stable
  // parameter sets.
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> ug(0.0, 0.08), ud(-0.15, 0.2),
      uw(-0.3, 0.3), uth(0.0, kPi);
  int tested = 0;
  for (int it = 0; it < 400 && tested < 120; ++it) {
    SystemParams p = benchmark(ug(rng), ud(rng));
    if (stability_check(p).margin > -1e-6) continue;
    const LangevinSystem sys = assemble_langevin(p);
    const double w = uw(rng), th = uth(rng);
    const TransferMatrix t = output_transfer(sys, w);
    const double sum = spectrum_from_transfer(t, th) +
                       spectrum_from_transfer(t, th + kPi / 2.0);
    CHECK(sum >= 2.0 - 1e-10);
    ++tested;
  }
  REQUIRE(tested >= 120);

  // Passive point: the sum saturates at exactly 2.
  const LangevinSystem sys = assemble_langevin(benchmark(0.0, 0.1));
  const TransferMatrix t = output_transfer(sys, 0.07);
  const double sum = spectrum_from_transfer(t, 0.3) +
                     spectrum_from_transfer(t, 0.3 + kPi / 2.0);
  CHECK(std::abs(sum - 2.0) <= 1e-12);
}

TEST_CASE("extremal quadratures respect the noise product bound") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> ug(0.0, 0.08), ud(-0.15, 0.2),
      uw(-0.3, 0.3);
  int tested = 0;
  for (int it = 0; it < 400 && tested < 80; ++it) {
    SystemParams p = benchmark(ug(rng), ud(rng));
    if (stability_check(p).margin > -1e-6) continue;
    const LangevinSystem sys = assemble_langevin(p);
    const OptimalAngle oa = optimal_angle(sys, uw(rng));
    CHECK(oa.s_min * oa.s_max >= 1.0 - 1e-10);
    CHECK(oa.s_min <= oa.s_max);
    ++tested;
  }
  REQUIRE(tested >= 80);
}

TEST_CASE("closed-form angle optimum matches a dense scan") {
  const LangevinSystem sys = assemble_langevin(benchmark(0.04, 0.1));
  const double w_lower = 0.077459666924148;
  const TransferMatrix t = output_transfer(sys, w_lower);
  const OptimalAngle oa = optimal_angle(sys, w_lower);

  CHECK(std::abs(oa.s_min - 0.634392994592) <= 1e-9);
  CHECK(std::abs(oa.theta_min - 0.186143505) <= 1e-7);
  CHECK(std::abs(oa.theta_max - 1.756939832) <= 1e-7);

  double scan_min = 1e300, scan_arg = 0.0;
  const int n = 10001;
  for (int i = 0; i < n; ++i) {
    const double th = kPi * i / n;
    const double s = spectrum_from_transfer(t, th);
    if (s < scan_min) {
      scan_min = s;
      scan_arg = th;
    }
  }
  CHECK(std::abs(scan_min - oa.s_min) <= 1e-6);
  CHECK(std::abs(scan_arg - oa.theta_min) <= 2.0 * kPi / n);
  // Extremal angles are orthogonal quadratures.
  CHECK(std::abs(std::abs(oa.theta_max - oa.theta_min) - kPi / 2.0) <= 1e-10);

  CHECK(oa.theta_min >= 0.0);
  CHECK(oa.theta_min < kPi);
  CHECK(oa.theta_max >= 0.0);
  CHECK(oa.theta_max < kPi);
}

TEST_CASE("spectra stay strictly positive on the benchmark grids") {
  for (auto [gmod, da] : {std::pair{0.001, 0.1}, {0.01, 0.1}, {0.04, 0.1},
                          {0.05, 0.0}, {0.05, 0.1}}) {
    const LangevinSystem sys = assemble_langevin(benchmark(gmod, da));
    const auto rows = quadrature_spectrum(sys, linspace(-0.3, 0.3, 201),
                                          {kTheta1, kTheta2},
                                          OutputMode::cavity, 2);
    double lo = 1e300;
    for (const auto& r : rows) lo = std::min(lo, r.s_linear);
    CHECK(lo > 0.0);
    CHECK(lo > 0.4);  // nothing on these grids approaches degeneracy
  }
}

TEST_CASE("matter-port spectra are positive and vacuum at zero coupling") {
  const LangevinSystem sys0 = assemble_langevin(benchmark(0.0, 0.1));
  for (double w : {-0.2, 0.0, 0.13}) {
    const double s = spectrum_from_transfer(output_transfer(sys0, w), 0.7,
                                            OutputMode::matter);
    CHECK(std::abs(s - 1.0) <= 1e-12);
  }

  const LangevinSystem sys = assemble_langevin(benchmark(0.04, 0.1));
  for (double w : linspace(-0.3, 0.3, 61)) {
    const double s = spectrum_from_transfer(output_transfer(sys, w), kTheta1,
                                            OutputMode::matter);
    CHECK(s > 0.0);
  }
}

TEST_CASE("decibel conversion is the base-ten map") {
  CHECK(to_db(1.0) == 0.0);
  CHECK(std::abs(to_db(0.5) - (-3.0102999566398120)) <= 1e-12);
  CHECK(std::abs(to_db(10.0) - 10.0) <= 1e-12);
}
