// Command-line front end: resolves a config file plus flag overrides into a
// single run. Flags beat the config file; SQZSIM_THREADS beats the config
// file but not --threads. Exactly one machine-readable summary line goes to
// stdout; progress and diagnostics go to stderr.
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sqz/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Output squeezing spectra of a modulated two-mode cavity"};

  std::string config_path;
  std::string out_dir;
  std::string format;
  int threads = -1;

  app.add_option("--config", config_path, "Path to the run config file")
      ->required();
  app.add_option("--out", out_dir, "Output directory (overrides config)");
  app.add_option("--format", format,
                 "Export format: csv, json or both (overrides config)");
  app.add_option("--threads", threads,
                 "Worker threads, 0 = auto (overrides config and "
                 "SQZSIM_THREADS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cout << "status=error code=config_parse exit=" << sqz::exit_parse
              << " message=\"" << e.what() << "\"\n";
    return sqz::exit_parse;
  }

  sqz::RunConfig cfg;
  try {
    cfg = sqz::parse_config_file(config_path);

    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (!format.empty()) {
      if (format == "csv") cfg.format = sqz::OutputFormat::csv;
      else if (format == "json") cfg.format = sqz::OutputFormat::json;
      else if (format == "both") cfg.format = sqz::OutputFormat::both;
      else {
        throw sqz::Error(sqz::ErrorCode::config_domain,
                         "--format must be csv, json or both");
      }
    }
    sqz::apply_thread_override(
        cfg, threads >= 0 ? std::optional<int>(threads) : std::nullopt);
    if (cfg.threads < 0) {
      throw sqz::Error(sqz::ErrorCode::config_domain,
                       "threads must be >= 0");
    }
  } catch (const sqz::Error& e) {
    const int code = sqz::exit_code_for(e.code());
    std::cout << "status=error code=" << sqz::error_code_name(e.code())
              << " exit=" << code << " message=\"" << e.what() << "\"\n";
    return code;
  }

  return sqz::run(cfg, std::cout, std::cerr);
}
