#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace sqz {

// Failure classes surfaced by the library. The CLI maps these onto process
// exit codes; library users catch Error and branch on code().
enum class ErrorCode {
  config_parse,      // malformed config text: syntax, unknown key, bad number
  config_domain,     // well-formed input that is physically/semantically invalid
  unstable_regime,   // stationary quantity requested where no steady state exists
  singular_system,   // frequency-domain solve hit a numerically singular matrix
  step_too_large,    // integrator step exceeds the resolution bound
  nonphysical_state, // propagated covariance violated the uncertainty bound
  empty_result,      // export invoked with nothing to write
  io_failure,        // filesystem / stream failure
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::config_parse: return "config_parse";
    case ErrorCode::config_domain: return "config_domain";
    case ErrorCode::unstable_regime: return "unstable_regime";
    case ErrorCode::singular_system: return "singular_system";
    case ErrorCode::step_too_large: return "step_too_large";
    case ErrorCode::nonphysical_state: return "nonphysical_state";
    case ErrorCode::empty_result: return "empty_result";
    case ErrorCode::io_failure: return "io_failure";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  Error(ErrorCode code, const std::string& msg, double detail)
      : std::runtime_error(msg), code_(code), detail_(detail) {}

  ErrorCode code() const { return code_; }

  // Optional numeric payload; for unstable_regime this carries max Re eig(f)
  // so callers can report the growth rate without recomputing it.
  double detail() const { return detail_; }

 private:
  ErrorCode code_;
  double detail_ = std::numeric_limits<double>::quiet_NaN();
};

}  // namespace sqz
