#ifndef ILA_CLI_HPP
#define ILA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ila {

inline constexpr const char* kVersion = "0.1.0";

/// Entry point of the `ila` tool. `args` excludes the program name.
/// Returns the process exit code: 0 on success, 1 on usage or input
/// errors, 2 when the traces are not coherent with the partition.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ila

#endif
