#ifndef APERY_CLI_HPP
#define APERY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace apery::cli {

/// Exit codes.
inline constexpr int kOk = 0;       // every requested check holds / computation complete
inline constexpr int kFails = 1;    // some check certified false
inline constexpr int kUsage = 2;    // bad arguments
inline constexpr int kUnknown = 3;  // undecided after maximal refinement

/// Runs one command. `args` excludes the program name. Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apery::cli

#endif  // APERY_CLI_HPP
