#pragma once

#include <iosfwd>

#include "sqz/config.hpp"

namespace sqz {

inline constexpr int exit_ok = 0;
inline constexpr int exit_parse = 2;
inline constexpr int exit_domain = 3;
inline constexpr int exit_unstable = 4;
inline constexpr int exit_numerical = 5;
inline constexpr int exit_io = 6;

int exit_code_for(ErrorCode c);

// Executes one resolved run end to end: compute, export, and exactly one
// machine-readable `key=value` summary line on `out`. Progress goes to
// `err`. Never throws; failures become a `status=error ...` (or
// `status=unstable ...`, which names max Re eig(f)) line plus the mapped
// exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace sqz
