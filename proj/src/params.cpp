#include "sqz/params.hpp"

#include <cmath>
#include <sstream>

namespace sqz {

namespace {

bool finite(double v) { return std::isfinite(v); }

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

ValidationReport validate_params(const SystemParams& p) {
  ValidationReport r;

  auto err = [&r](const std::string& m) { r.errors.push_back(m); };
  auto warn = [&r](const std::string& m) { r.warnings.push_back(m); };

  for (auto [v, name] : {std::pair{p.omega_a, "omega_a"},
                         {p.omega_G, "omega_G"},
                         {p.W, "W"},
                         {p.G0, "G0"},
                         {p.Gmod, "Gmod"},
                         {p.gamma_a, "gamma_a"},
                         {p.gamma_P, "gamma_P"}}) {
    if (!finite(v)) err(std::string(name) + " is not finite");
  }
  if (r.errors.empty()) {
    if (p.omega_a <= 0) err("omega_a must be positive, got " + num(p.omega_a));
    if (p.omega_G <= 0) err("omega_G must be positive, got " + num(p.omega_G));
    if (p.W <= 0) err("W must be positive, got " + num(p.W));
    if (p.gamma_a <= 0)
      err("gamma_a must be positive, got " + num(p.gamma_a));
    if (p.gamma_P <= 0)
      err("gamma_P must be positive, got " + num(p.gamma_P));
    if (p.G0 < 0) err("G0 must be nonnegative, got " + num(p.G0));
    if (p.Gmod < 0) err("Gmod must be nonnegative, got " + num(p.Gmod));
  }

  if (r.errors.empty()) {
    // Modelling-regime caveats for the time-averaged description: the
    // matter mode should be slow against the modulation, and the
    // modulation perturbative against both.
    if (!(p.W < p.omega_G))
      warn("W < omega_G violated (W = " + num(p.W) +
           ", omega_G = " + num(p.omega_G) +
           "): the matter mode is not slow against the modulation");
    if (p.G0 + p.Gmod > 0.2 * p.omega_G)
      warn("G0 + Gmod <= 0.2 omega_G violated (" + num(p.G0 + p.Gmod) +
           " > " + num(0.2 * p.omega_G) +
           "): modulation beyond the perturbative budget");
    if (!(p.G0 + p.Gmod <= p.W))
      warn("G0 + Gmod <= W violated (" + num(p.G0 + p.Gmod) + " > " +
           num(p.W) + ")");
    if (!(p.G0 >= p.Gmod))
      warn("G0 >= Gmod violated (G0 = " + num(p.G0) +
           ", Gmod = " + num(p.Gmod) +
           "): modulation exceeds the static bias");
  }

  r.ok = r.errors.empty();
  return r;
}

}  // namespace sqz
