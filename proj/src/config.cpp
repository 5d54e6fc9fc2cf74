#include "sqz/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

namespace sqz {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  std::ostringstream os;
  os << "config line " << line << ": " << msg;
  throw Error(ErrorCode::config_parse, os.str());
}

[[noreturn]] void domain_fail(const std::string& msg) {
  throw Error(ErrorCode::config_domain, msg);
}

double parse_double(const std::string& v, int line) {
  double out = 0.0;
  const char* begin = v.data();
  const char* end = v.data() + v.size();
  const auto res = std::from_chars(begin, end, out);
  if (res.ec != std::errc{} || res.ptr != end) {
    parse_fail(line, "expected a number, got '" + v + "'");
  }
  return out;
}

int parse_int(const std::string& v, int line) {
  int out = 0;
  const char* begin = v.data();
  const char* end = v.data() + v.size();
  const auto res = std::from_chars(begin, end, out);
  if (res.ec != std::errc{} || res.ptr != end) {
    parse_fail(line, "expected an integer, got '" + v + "'");
  }
  return out;
}

std::vector<double> parse_list(const std::string& v, int line) {
  std::vector<double> out;
  std::string item;
  std::istringstream is(v);
  while (std::getline(is, item, ',')) {
    item = trim(item);
    if (item.empty()) parse_fail(line, "empty entry in list '" + v + "'");
    out.push_back(parse_double(item, line));
  }
  if (out.empty()) parse_fail(line, "empty list");
  return out;
}

bool selector_is_sweep(const std::string& s) {
  return s == "sweep-2a" || s == "sweep-2b";
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  bool sweep_keys_seen = false;

  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    // comments start at '#' or ';'
    const auto cpos = raw.find_first_of("#;");
    std::string line = trim(cpos == std::string::npos ? raw
                                                      : raw.substr(0, cpos));
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') parse_fail(line_no, "unterminated section");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "run" && section != "system" && section != "grid" &&
          section != "sweep" && section != "output") {
        parse_fail(line_no, "unknown section [" + section + "]");
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      parse_fail(line_no, "expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty()) parse_fail(line_no, "missing key");
    if (val.empty()) parse_fail(line_no, "missing value for '" + key + "'");
    if (section.empty()) {
      parse_fail(line_no, "key '" + key + "' appears before any section");
    }

    if (section == "run") {
      if (key == "selector") cfg.selector = val;
      else parse_fail(line_no, "unknown key '" + key + "' in [run]");
    } else if (section == "system") {
      if (key == "omega_a") cfg.params.omega_a = parse_double(val, line_no);
      else if (key == "omega_G") cfg.params.omega_G = parse_double(val, line_no);
      else if (key == "W") cfg.params.W = parse_double(val, line_no);
      else if (key == "G0") cfg.params.G0 = parse_double(val, line_no);
      else if (key == "Gmod") cfg.params.Gmod = parse_double(val, line_no);
      else if (key == "gamma_a") cfg.params.gamma_a = parse_double(val, line_no);
      else if (key == "gamma_P") cfg.params.gamma_P = parse_double(val, line_no);
      else if (key == "convention") {
        if (val == "half") cfg.params.convention = Convention::half;
        else if (val == "full") cfg.params.convention = Convention::full;
        else parse_fail(line_no, "convention must be 'half' or 'full'");
      } else parse_fail(line_no, "unknown key '" + key + "' in [system]");
    } else if (section == "grid") {
      if (key == "omega_min") cfg.omega_min = parse_double(val, line_no);
      else if (key == "omega_max") cfg.omega_max = parse_double(val, line_no);
      else if (key == "omega_count") cfg.omega_count = parse_int(val, line_no);
      else if (key == "thetas") cfg.thetas = parse_list(val, line_no);
      else parse_fail(line_no, "unknown key '" + key + "' in [grid]");
    } else if (section == "sweep") {
      sweep_keys_seen = true;
      if (key == "axis") {
        if (val == "Gmod") cfg.axis = SweepAxis::Gmod;
        else if (val == "delta_a") cfg.axis = SweepAxis::delta_a;
        else if (val == "omega_G") cfg.axis = SweepAxis::omega_G;
        else parse_fail(line_no, "unknown sweep axis '" + val + "'");
      } else if (key == "values") {
        cfg.values = parse_list(val, line_no);
      } else parse_fail(line_no, "unknown key '" + key + "' in [sweep]");
    } else if (section == "output") {
      if (key == "dir") cfg.out_dir = val;
      else if (key == "format") {
        if (val == "csv") cfg.format = OutputFormat::csv;
        else if (val == "json") cfg.format = OutputFormat::json;
        else if (val == "both") cfg.format = OutputFormat::both;
        else parse_fail(line_no, "format must be csv, json or both");
      } else if (key == "threads") cfg.threads = parse_int(val, line_no);
      else parse_fail(line_no, "unknown key '" + key + "' in [output]");
    }
  }

  // Domain validation: structurally fine, but is it a run we can mean?
  static const char* selectors[] = {"spectrum",   "sweep-2a",
                                    "sweep-2b",   "polaritons",
                                    "rwa-validate", "oracle-compare"};
  if (cfg.selector.empty()) domain_fail("selector is required ([run] section)");
  if (std::find_if(std::begin(selectors), std::end(selectors),
                   [&](const char* s) { return cfg.selector == s; }) ==
      std::end(selectors)) {
    domain_fail("unknown selector '" + cfg.selector + "'");
  }

  const ValidationReport vr = validate_params(cfg.params);
  if (!vr.ok) {
    std::string msg = "invalid system parameters:";
    for (const auto& e : vr.errors) msg += " " + e + ";";
    domain_fail(msg);
  }

  if (cfg.omega_count < 1) domain_fail("omega_count must be >= 1");
  if (cfg.omega_min.has_value() != cfg.omega_max.has_value()) {
    domain_fail("omega_min and omega_max must be given together");
  }
  if (cfg.omega_min && *cfg.omega_min > *cfg.omega_max) {
    domain_fail("omega_min must not exceed omega_max");
  }
  for (double th : cfg.thetas) {
    if (!std::isfinite(th)) domain_fail("theta values must be finite");
  }
  for (double v : cfg.values) {
    if (!std::isfinite(v)) domain_fail("sweep values must be finite");
  }
  if (cfg.threads < 0) domain_fail("threads must be >= 0");

  if (sweep_keys_seen && !selector_is_sweep(cfg.selector)) {
    domain_fail("[sweep] settings are only valid for sweep selectors");
  }
  if (cfg.axis) {
    if (cfg.selector == "sweep-2a" && *cfg.axis != SweepAxis::Gmod) {
      domain_fail("sweep-2a sweeps Gmod; axis cannot be overridden");
    }
    if (cfg.selector == "sweep-2b" && *cfg.axis != SweepAxis::delta_a) {
      domain_fail("sweep-2b sweeps delta_a; axis cannot be overridden");
    }
  }

  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::io_failure, "cannot read config file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void apply_thread_override(RunConfig& cfg, std::optional<int> flag_threads) {
  if (flag_threads) {
    cfg.threads = *flag_threads;
    return;
  }
  if (const char* env = std::getenv("SQZSIM_THREADS")) {
    int v = 0;
    const char* end = env + std::string_view(env).size();
    const auto res = std::from_chars(env, end, v);
    if (res.ec == std::errc{} && res.ptr == end && v >= 0) cfg.threads = v;
  }
}

std::vector<double> omega_grid(const RunConfig& cfg) {
  const double lo = cfg.omega_min.value_or(-3.0 * cfg.params.W);
  const double hi = cfg.omega_max.value_or(3.0 * cfg.params.W);
  const int n = cfg.omega_count;
  std::vector<double> g(static_cast<std::size_t>(n));
  if (n == 1) {
    g[0] = lo;
    return g;
  }
  for (int i = 0; i < n; ++i) {
    g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  }
  return g;
}

std::vector<double> theta_list(const RunConfig& cfg) {
  if (!cfg.thetas.empty()) return cfg.thetas;
  return {std::numbers::pi / 6.0, 2.0 * std::numbers::pi / 3.0};
}

SweepAxis sweep_axis(const RunConfig& cfg) {
  if (cfg.axis) return *cfg.axis;
  return cfg.selector == "sweep-2b" ? SweepAxis::delta_a : SweepAxis::Gmod;
}

std::vector<double> sweep_values(const RunConfig& cfg) {
  if (!cfg.values.empty()) return cfg.values;
  if (cfg.selector == "sweep-2b") return {0.1, 0.05, 0.0, -0.05, -0.1};
  return {0.001, 0.01, 0.04};
}

}  // namespace sqz
