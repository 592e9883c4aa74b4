#ifndef ATOMEMBED_TOOLS_CLI_HPP
#define ATOMEMBED_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace atomembed::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_indeterminate = 2;

/// Runs one command line. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`; `in` is read when the measure path is "-"
/// or omitted.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace atomembed::cli

#endif  // ATOMEMBED_TOOLS_CLI_HPP
