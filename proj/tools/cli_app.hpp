#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hpfem::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_numerical = 1;
inline constexpr int exit_config = 2;

/// Runs the driver on args (without the program name). Normal output goes to
/// out unless --out is given; diagnostics go to err. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hpfem::cli
