#ifndef SRW_CLI_HPP
#define SRW_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace srw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitTheoremFailure = 1;
inline constexpr int kExitInputError = 2;

/// Runs the command line `args` (without the program name), writing reports
/// to `out` and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srw::cli

#endif  // SRW_CLI_HPP
