#pragma once

#include <ostream>
#include <span>
#include <string>

namespace kf {

/// Runs the `kf` command line. `args` excludes the program name. Data goes
/// to `out`, diagnostics to `err`. Returns 0 on success, 1 for a negative
/// result (unprovable, countermodel found, suite failure, proof rejected)
/// and 2 for usage or parse errors.
int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace kf
