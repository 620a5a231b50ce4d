#ifndef BERNID_CLI_HPP
#define BERNID_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bernid/identities.hpp"

namespace bernid::cli {

enum ExitStatus : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
};

/// Parses "a..b" (inclusive) or a single integer "a". Throws std::invalid_argument.
Range parse_range(std::string_view text);

/// One line, e.g. "1.1 n=4 p=0 q=0 holds residual=0 elapsed_ms=0.012".
std::string format_text(const VerifyReport& r);
/// One JSON object with fields id, n, p, q, holds, residual, elapsed_ms.
std::string format_json(const VerifyReport& r);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bernid::cli

#endif  // BERNID_CLI_HPP
