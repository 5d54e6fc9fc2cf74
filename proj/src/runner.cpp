#include "sqz/runner.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "sqz/periodic.hpp"

namespace sqz {

namespace {

namespace fs = std::filesystem;

std::string fd(double v) { return format_double(v); }

void ensure_out_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::io_failure,
                "cannot create output directory '" + dir +
                    "': " + ec.message());
  }
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

bool wants_csv(OutputFormat f) {
  return f == OutputFormat::csv || f == OutputFormat::both;
}
bool wants_json(OutputFormat f) {
  return f == OutputFormat::json || f == OutputFormat::both;
}

int run_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const LangevinSystem sys = assemble_langevin(cfg.params);
  const std::vector<double> omegas = omega_grid(cfg);
  const std::vector<double> thetas = theta_list(cfg);
  const std::vector<NoiseSpectrum> rows = quadrature_spectrum(
      sys, omegas, thetas, OutputMode::cavity, cfg.threads);
  const SqueezingSummary s = squeezing_summary(cfg.params, rows);

  ensure_out_dir(cfg.out_dir);
  if (wants_csv(cfg.format)) {
    export_csv(join_path(cfg.out_dir, "spectrum.csv"), rows);
  }
  if (wants_json(cfg.format)) {
    export_spectrum_json(join_path(cfg.out_dir, "spectrum.json"), cfg.params,
                         rows, s);
  }
  err << "spectrum: " << rows.size() << " points computed\n";

  out << "status=ok selector=spectrum s_min_db=" << fd(s.s_min_db)
      << " omega_at_min=" << fd(s.omega_at_min)
      << " theta_at_min=" << fd(s.theta_at_min)
      << " stable=1 points=" << rows.size() << " out_dir=" << cfg.out_dir
      << "\n";
  return exit_ok;
}

int run_sweep_selector(const RunConfig& cfg, std::ostream& out,
                       std::ostream& err) {
  SweepSpec spec;
  spec.axis = sweep_axis(cfg);
  spec.values = sweep_values(cfg);
  spec.base = cfg.params;
  spec.omegas = omega_grid(cfg);
  spec.thetas = theta_list(cfg);
  spec.threads = cfg.threads;

  const std::string experiment =
      cfg.selector == "sweep-2b" ? "figure2b" : "figure2a";
  const std::vector<SweepPoint> points =
      run_sweep(spec, [&err](const std::string& line) { err << line << "\n"; });

  ensure_out_dir(cfg.out_dir);
  std::size_t n_stable = 0;
  for (const SweepPoint& pt : points) {
    if (!pt.summary.stable) continue;
    ++n_stable;
    if (wants_csv(cfg.format)) {
      export_csv(join_path(cfg.out_dir, sweep_filename(experiment, spec.axis,
                                                       pt.axis_value)),
                 pt.spectrum);
    }
  }
  if (wants_json(cfg.format)) {
    export_sweep_json(join_path(cfg.out_dir, experiment + "_summaries.json"),
                      experiment, spec, points);
  }

  // Headline: deepest stable minimum across the family.
  double best_db = std::numeric_limits<double>::infinity();
  double best_value = std::numeric_limits<double>::quiet_NaN();
  for (const SweepPoint& pt : points) {
    if (pt.summary.stable && pt.summary.s_min_db < best_db) {
      best_db = pt.summary.s_min_db;
      best_value = pt.axis_value;
    }
  }

  out << "status=ok selector=" << cfg.selector << " points=" << points.size()
      << " stable_points=" << n_stable;
  if (n_stable > 0) {
    out << " best_s_min_db=" << fd(best_db) << " best_" << axis_name(spec.axis)
        << "=" << fd(best_value);
  }
  out << " out_dir=" << cfg.out_dir << "\n";
  return exit_ok;
}

int run_polaritons(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const PolaritonBranches br = polariton_frequencies(cfg.params);
  const StabilityReport st = stability_check(cfg.params);

  if (wants_json(cfg.format)) {
    ensure_out_dir(cfg.out_dir);
    std::ostringstream js;
    js << "{\n  \"lower\": " << fd(br.lower) << ",\n  \"upper\": "
       << fd(br.upper) << ",\n  \"lossless_stable\": "
       << (br.stable ? "true" : "false") << ",\n  \"damped_stable\": "
       << (st.stable ? "true" : "false") << ",\n  \"margin\": "
       << fd(st.margin) << "\n}\n";
    std::ofstream f(join_path(cfg.out_dir, "polaritons.json"),
                    std::ios::binary);
    if (!f) throw Error(ErrorCode::io_failure, "cannot write polaritons.json");
    f << js.str();
  }

  out << "status=ok selector=polaritons lower=" << fd(br.lower)
      << " upper=" << fd(br.upper) << " stable=" << (st.stable ? 1 : 0)
      << " margin=" << fd(st.margin) << "\n";
  return exit_ok;
}

int run_rwa(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  err << "rwa-validate: propagating the fully modulated model\n";
  const RwaReport r = rwa_validate(cfg.params);
  out << "status=ok selector=rwa-validate deviation=" << fd(r.deviation)
      << " threshold=" << fd(r.threshold) << " pass=" << (r.pass ? 1 : 0)
      << "\n";
  return exit_ok;
}

int run_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  err << "oracle-compare: frequency solver vs time-domain regression\n";
  const OracleComparison c = oracle_compare(cfg.params, omega_grid(cfg),
                                            theta_list(cfg), cfg.threads);
  out << "status=ok selector=oracle-compare max_abs_db_gap="
      << fd(c.max_abs_db_gap) << " omega_at_max=" << fd(c.omega_at_max)
      << " theta_at_max=" << fd(c.theta_at_max) << " pass=" << (c.pass ? 1 : 0)
      << "\n";
  return exit_ok;
}

}  // namespace

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::config_parse: return exit_parse;
    case ErrorCode::config_domain: return exit_domain;
    case ErrorCode::unstable_regime: return exit_unstable;
    case ErrorCode::singular_system:
    case ErrorCode::step_too_large:
    case ErrorCode::nonphysical_state:
    case ErrorCode::empty_result: return exit_numerical;
    case ErrorCode::io_failure: return exit_io;
  }
  return exit_numerical;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.selector == "spectrum") return run_spectrum(cfg, out, err);
    if (cfg.selector == "sweep-2a" || cfg.selector == "sweep-2b") {
      return run_sweep_selector(cfg, out, err);
    }
    if (cfg.selector == "polaritons") return run_polaritons(cfg, out, err);
    if (cfg.selector == "rwa-validate") return run_rwa(cfg, out, err);
    if (cfg.selector == "oracle-compare") return run_oracle(cfg, out, err);
    out << "status=error code=config_domain exit=" << exit_domain
        << " message=\"unknown selector '" << cfg.selector << "'\"\n";
    return exit_domain;
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    if (e.code() == ErrorCode::unstable_regime) {
      // Name the growth rate: callers diagnosing a refused stationary
      // computation need max Re eig(f) first.
      out << "status=unstable selector=" << cfg.selector
          << " max_re_eig=" << fd(e.detail()) << " exit=" << code
          << " message=\"" << e.what() << "\"\n";
    } else {
      out << "status=error code=" << error_code_name(e.code())
          << " exit=" << code << " message=\"" << e.what() << "\"\n";
    }
    return code;
  } catch (const std::exception& e) {
    out << "status=error code=internal exit=" << exit_numerical
        << " message=\"" << e.what() << "\"\n";
    return exit_numerical;
  }
}

}  // namespace sqz
