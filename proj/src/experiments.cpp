#include "sqz/experiments.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sqz/errors.hpp"

namespace sqz {

namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

json params_to_json(const SystemParams& p) {
  return json{{"omega_a", p.omega_a},
              {"omega_G", p.omega_G},
              {"W", p.W},
              {"G0", p.G0},
              {"Gmod", p.Gmod},
              {"gamma_a", p.gamma_a},
              {"gamma_P", p.gamma_P},
              {"convention",
               p.convention == Convention::half ? "half" : "full"}};
}

SystemParams params_from_json(const json& j) {
  SystemParams p;
  p.omega_a = j.at("omega_a").get<double>();
  p.omega_G = j.at("omega_G").get<double>();
  p.W = j.at("W").get<double>();
  p.G0 = j.at("G0").get<double>();
  p.Gmod = j.at("Gmod").get<double>();
  p.gamma_a = j.at("gamma_a").get<double>();
  p.gamma_P = j.at("gamma_P").get<double>();
  p.convention = j.at("convention").get<std::string>() == "full"
                     ? Convention::full
                     : Convention::half;
  return p;
}

json summary_to_json(const SqueezingSummary& s) {
  auto num = [](double v) -> json {
    // JSON has no NaN literal; unstable points carry null dB fields.
    if (std::isnan(v)) return nullptr;
    return v;
  };
  return json{{"s_min_db", num(s.s_min_db)},
              {"omega_at_min", num(s.omega_at_min)},
              {"theta_at_min", num(s.theta_at_min)},
              {"s_min_orthogonal_db", num(s.s_min_orthogonal_db)},
              {"omega_at_min_orthogonal", num(s.omega_at_min_orthogonal)},
              {"polariton_lower", s.polariton_lower},
              {"polariton_upper", s.polariton_upper},
              {"stable", s.stable}};
}

SqueezingSummary summary_from_json(const json& j) {
  auto num = [&j](const char* key) {
    const auto& v = j.at(key);
    return v.is_null() ? kNaN : v.get<double>();
  };
  SqueezingSummary s;
  s.s_min_db = num("s_min_db");
  s.omega_at_min = num("omega_at_min");
  s.theta_at_min = num("theta_at_min");
  s.s_min_orthogonal_db = num("s_min_orthogonal_db");
  s.omega_at_min_orthogonal = num("omega_at_min_orthogonal");
  s.polariton_lower = j.at("polariton_lower").get<double>();
  s.polariton_upper = j.at("polariton_upper").get<double>();
  s.stable = j.at("stable").get<bool>();
  return s;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::io_failure, "cannot open for writing: " + path);
  }
  out << text;
  out.flush();
  if (!out) {
    throw Error(ErrorCode::io_failure, "write failed: " + path);
  }
}

}  // namespace

const char* axis_name(SweepAxis a) {
  switch (a) {
    case SweepAxis::Gmod: return "Gmod";
    case SweepAxis::delta_a: return "delta_a";
    case SweepAxis::omega_G: return "omega_G";
  }
  return "?";
}

SystemParams apply_axis(const SystemParams& base, SweepAxis axis,
                        double value) {
  SystemParams p = base;
  switch (axis) {
    case SweepAxis::Gmod:
      p.Gmod = value;
      break;
    case SweepAxis::delta_a:
      // The detuning is owned by omega_G (omega_a is the unit); sweeping
      // delta_a moves the modulation frequency.
      p.omega_G = p.omega_a - value;
      break;
    case SweepAxis::omega_G:
      p.omega_G = value;
      break;
  }
  return p;
}

SqueezingSummary squeezing_summary(const SystemParams& p,
                                   const std::vector<NoiseSpectrum>& rows) {
  SqueezingSummary s;
  const PolaritonBranches br = polariton_frequencies(p);
  s.polariton_lower = br.lower;
  s.polariton_upper = br.upper;
  const StabilityReport st = stability_check(p);
  s.stable = st.stable;

  if (!st.stable || rows.empty()) {
    s.s_min_db = kNaN;
    s.omega_at_min = kNaN;
    s.theta_at_min = kNaN;
    s.s_min_orthogonal_db = kNaN;
    s.omega_at_min_orthogonal = kNaN;
    return s;
  }

  // Minimum scan; exact ties break toward lower omega', then lower theta,
  // so a flat spectrum reports the first grid point.
  const NoiseSpectrum* best = &rows.front();
  for (const NoiseSpectrum& r : rows) {
    if (r.s_linear < best->s_linear ||
        (r.s_linear == best->s_linear &&
         (r.omega_prime < best->omega_prime ||
          (r.omega_prime == best->omega_prime && r.theta < best->theta)))) {
      best = &r;
    }
  }
  s.s_min_db = best->s_db;
  s.omega_at_min = best->omega_prime;
  s.theta_at_min = best->theta;

  // Orthogonal quadrature: recompute over the same frequencies at
  // theta* + pi/2 (wrapped into [0, pi)).
  double th_orth = std::fmod(best->theta + std::numbers::pi / 2.0,
                             std::numbers::pi);
  if (th_orth < 0) th_orth += std::numbers::pi;

  std::vector<double> omegas;
  omegas.reserve(rows.size());
  for (const NoiseSpectrum& r : rows) {
    if (omegas.empty() || omegas.back() != r.omega_prime)
      omegas.push_back(r.omega_prime);
  }

  const LangevinSystem sys = assemble_langevin(p);
  double best_s = std::numeric_limits<double>::infinity();
  double best_w = omegas.front();
  for (double w : omegas) {
    const double v = quadrature_spectrum(sys, w, th_orth);
    if (v < best_s) {
      best_s = v;
      best_w = w;
    }
  }
  s.s_min_orthogonal_db = to_db(best_s);
  s.omega_at_min_orthogonal = best_w;
  return s;
}

std::vector<SweepPoint> run_sweep(const SweepSpec& spec,
                                  const ProgressFn& progress) {
  std::vector<SweepPoint> points;
  points.reserve(spec.values.size());

  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    SweepPoint pt;
    pt.axis_value = spec.values[i];
    pt.params = apply_axis(spec.base, spec.axis, spec.values[i]);

    const StabilityReport st = stability_check(pt.params);
    if (st.stable) {
      const LangevinSystem sys = assemble_langevin(pt.params);
      pt.spectrum = quadrature_spectrum(sys, spec.omegas, spec.thetas,
                                        OutputMode::cavity, spec.threads);
    }
    pt.summary = squeezing_summary(pt.params, pt.spectrum);

    if (progress) {
      std::ostringstream os;
      os << "point " << (i + 1) << "/" << spec.values.size() << " "
         << axis_name(spec.axis) << "=" << format_double(spec.values[i])
         << (pt.summary.stable
                 ? " s_min_db=" + format_double(pt.summary.s_min_db)
                 : " unstable (max Re eig(f) = " + format_double(st.margin) +
                       ")");
      progress(os.str());
    }
    points.push_back(std::move(pt));
  }
  return points;
}

std::vector<SweepPoint> figure2a_sweep(SweepSpec spec,
                                       const ProgressFn& progress) {
  spec.axis = SweepAxis::Gmod;
  return run_sweep(spec, progress);
}

std::vector<SweepPoint> figure2b_sweep(SweepSpec spec,
                                       const ProgressFn& progress) {
  spec.axis = SweepAxis::delta_a;
  return run_sweep(spec, progress);
}

OracleComparison oracle_compare(const SystemParams& p,
                                const std::vector<double>& omegas,
                                const std::vector<double>& thetas,
                                int threads) {
  const LangevinSystem sys = assemble_langevin(p);  // refuses unstable
  const std::vector<NoiseSpectrum> freq =
      quadrature_spectrum(sys, omegas, thetas, OutputMode::cavity, threads);
  const std::vector<NoiseSpectrum> reg =
      output_spectrum_regression(p, omegas, thetas, threads);

  OracleComparison c;
  for (std::size_t i = 0; i < freq.size(); ++i) {
    const double gap = std::abs(freq[i].s_db - reg[i].s_db);
    if (gap > c.max_abs_db_gap) {
      c.max_abs_db_gap = gap;
      c.omega_at_max = freq[i].omega_prime;
      c.theta_at_max = freq[i].theta;
    }
  }
  c.pass = c.max_abs_db_gap <= 0.05;
  return c;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_double_12(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

void export_csv(const std::string& path,
                const std::vector<NoiseSpectrum>& rows) {
  if (rows.empty()) {
    throw Error(ErrorCode::empty_result,
                "refusing to export an empty spectrum to " + path);
  }
  std::string text;
  text.reserve(rows.size() * 64 + 64);
  text += "omega_prime,theta,S_linear,S_dB\n";
  for (const NoiseSpectrum& r : rows) {
    text += format_double_12(r.omega_prime);
    text += ',';
    text += format_double_12(r.theta);
    text += ',';
    text += format_double_12(r.s_linear);
    text += ',';
    text += format_double_12(r.s_db);
    text += '\n';
  }
  write_text_file(path, text);
}

std::string sweep_filename(const std::string& experiment, SweepAxis axis,
                           double value) {
  return experiment + "_" + axis_name(axis) + "=" + format_double(value) +
         ".csv";
}

void export_sweep_json(const std::string& path,
                       const std::string& experiment, const SweepSpec& spec,
                       const std::vector<SweepPoint>& points) {
  json j;
  j["experiment"] = experiment;
  j["axis"] = axis_name(spec.axis);
  j["base"] = params_to_json(spec.base);
  j["omegas"] = spec.omegas;
  j["thetas"] = spec.thetas;
  j["values"] = spec.values;
  json pts = json::array();
  for (const SweepPoint& pt : points) {
    pts.push_back(json{{"axis_value", pt.axis_value},
                       {"summary", summary_to_json(pt.summary)}});
  }
  j["points"] = std::move(pts);
  write_text_file(path, j.dump(2) + "\n");
}

ProvenanceRecord load_sweep_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::io_failure, "cannot open for reading: " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::io_failure,
                std::string("malformed provenance JSON: ") + e.what());
  }

  ProvenanceRecord rec;
  rec.experiment = j.at("experiment").get<std::string>();
  const std::string ax = j.at("axis").get<std::string>();
  rec.spec.axis = ax == "delta_a"  ? SweepAxis::delta_a
                  : ax == "omega_G" ? SweepAxis::omega_G
                                    : SweepAxis::Gmod;
  rec.spec.base = params_from_json(j.at("base"));
  rec.spec.omegas = j.at("omegas").get<std::vector<double>>();
  rec.spec.thetas = j.at("thetas").get<std::vector<double>>();
  rec.spec.values = j.at("values").get<std::vector<double>>();
  for (const auto& pt : j.at("points")) {
    rec.summaries.push_back(summary_from_json(pt.at("summary")));
  }
  return rec;
}

void export_spectrum_json(const std::string& path, const SystemParams& p,
                          const std::vector<NoiseSpectrum>& rows,
                          const SqueezingSummary& summary) {
  if (rows.empty()) {
    throw Error(ErrorCode::empty_result,
                "refusing to export an empty spectrum to " + path);
  }
  json j;
  j["params"] = params_to_json(p);
  j["summary"] = summary_to_json(summary);
  json data = json::array();
  for (const NoiseSpectrum& r : rows) {
    data.push_back(json{{"omega_prime", r.omega_prime},
                        {"theta", r.theta},
                        {"S_linear", r.s_linear},
                        {"S_dB", r.s_db}});
  }
  j["spectrum"] = std::move(data);
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace sqz
