#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sqz/regression.hpp"
#include "sqz/spectrum.hpp"

namespace sqz {

enum class SweepAxis { Gmod, delta_a, omega_G };
const char* axis_name(SweepAxis a);

// One family of runs: `base` with `axis` replaced by each entry of `values`
// in turn, spectra evaluated on the (omegas x thetas) grid.
struct SweepSpec {
  SweepAxis axis = SweepAxis::Gmod;
  std::vector<double> values;
  SystemParams base;
  std::vector<double> omegas;
  std::vector<double> thetas;
  int threads = 1;
};

SystemParams apply_axis(const SystemParams& base, SweepAxis axis,
                        double value);

// Headline numbers extracted from one spectrum grid. Ties in the minimum
// scan break toward the lowest omega', then the lowest theta (a flat vacuum
// spectrum therefore reports the first grid point). The orthogonal fields
// hold the minimum over omega' at the angle theta_at_min + pi/2, recomputed
// exactly rather than looked up, so they are well defined for any theta
// grid. On unstable parameter sets every dB field is NaN and only the
// polariton display values plus `stable` carry information.
struct SqueezingSummary {
  double s_min_db = 0.0;
  double omega_at_min = 0.0;
  double theta_at_min = 0.0;
  double s_min_orthogonal_db = 0.0;
  double omega_at_min_orthogonal = 0.0;
  double polariton_lower = 0.0;
  double polariton_upper = 0.0;
  bool stable = false;
};

SqueezingSummary squeezing_summary(const SystemParams& p,
                                   const std::vector<NoiseSpectrum>& rows);

struct SweepPoint {
  double axis_value = 0.0;
  SystemParams params;
  std::vector<NoiseSpectrum> spectrum;  // empty when !summary.stable
  SqueezingSummary summary;
};

using ProgressFn = std::function<void(const std::string&)>;

// Evaluates every sweep point in order, traversing unstable points
// gracefully (summary.stable = false, empty spectrum) instead of aborting
// the sweep. `progress`, when set, receives one line per finished point.
std::vector<SweepPoint> run_sweep(const SweepSpec& spec,
                                  const ProgressFn& progress = {});

// Modulation-amplitude family at fixed detuning, and detuning family at
// fixed modulation: thin wrappers that pin the axis.
std::vector<SweepPoint> figure2a_sweep(SweepSpec spec,
                                       const ProgressFn& progress = {});
std::vector<SweepPoint> figure2b_sweep(SweepSpec spec,
                                       const ProgressFn& progress = {});

// Frequency-domain solver against the time-domain regression route on one
// stable parameter set (throws Error(unstable_regime) otherwise — both
// routes refuse identically above threshold).
struct OracleComparison {
  double max_abs_db_gap = 0.0;
  double omega_at_max = 0.0;
  double theta_at_max = 0.0;
  bool pass = false;  // gap <= 0.05 dB
};
OracleComparison oracle_compare(const SystemParams& p,
                                const std::vector<double>& omegas,
                                const std::vector<double>& thetas,
                                int threads = 1);

// Shortest round-trip decimal for a double (filenames, summary lines) and
// the fixed 12-significant-digit form used for CSV payloads.
std::string format_double(double v);
std::string format_double_12(double v);

// CSV schema: header `omega_prime,theta,S_linear,S_dB`, one row per grid
// point in omega-major order, 12 significant digits per number. The byte
// stream is a pure function of the rows, so files are identical across
// runs and thread counts. Throws Error(empty_result) for an empty row set
// and Error(io_failure) when the file cannot be written.
void export_csv(const std::string& path,
                const std::vector<NoiseSpectrum>& rows);

// `<experiment>_<axis>=<value>.csv`
std::string sweep_filename(const std::string& experiment, SweepAxis axis,
                           double value);

// Self-contained JSON record of a sweep: every parameter, the exact grids
// and axis values, and the per-point summaries. Reloading the record and
// re-running reproduces the dB numbers to 1e-12.
void export_sweep_json(const std::string& path,
                       const std::string& experiment, const SweepSpec& spec,
                       const std::vector<SweepPoint>& points);

struct ProvenanceRecord {
  std::string experiment;
  SweepSpec spec;
  std::vector<SqueezingSummary> summaries;
};
ProvenanceRecord load_sweep_json(const std::string& path);

// Single-spectrum JSON export (parameters + rows + summary).
void export_spectrum_json(const std::string& path, const SystemParams& p,
                          const std::vector<NoiseSpectrum>& rows,
                          const SqueezingSummary& summary);

}  // namespace sqz
