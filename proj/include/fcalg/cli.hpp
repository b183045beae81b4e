#ifndef FCALG_CLI_HPP
#define FCALG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fcalg {

/// Full command-line front end, runnable in-process. `args` excludes the
/// program name. Reports go to `out` (or the --out file); diagnostics and
/// cache notices go to `err`. Returns the process exit code: 0 success,
/// 1 domain error, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fcalg

#endif
