#ifndef MOCS_CLI_HPP
#define MOCS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mocs::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInvalidInput = 2, kEmptyResult = 3 };

/// Runs one subcommand. `args` excludes the program name. The RunReport JSON
/// goes to `out`; diagnostics and trace lines go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// FNV-1a 64-bit digest of `bytes`, as 16 lowercase hex digits.
[[nodiscard]] std::string fnv1a64_hex(std::string_view bytes);

}  // namespace mocs::cli

#endif  // MOCS_CLI_HPP
