#ifndef GLIE_CLI_HPP
#define GLIE_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace glie::cli {

inline constexpr std::string_view kToolName = "glie";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// Runs one command line (without the program name). The JSON run report
/// goes to `out`, diagnostics and wall time to `err`.
///
/// Exit codes: 0 success, 1 invalid input (the validation report is
/// embedded in the payload), 2 usage or internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

}  // namespace glie::cli

#endif
