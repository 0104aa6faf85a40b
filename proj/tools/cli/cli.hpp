#ifndef ATANHCERT_CLI_HPP
#define ATANHCERT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace atanhcert::cli
{

// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,          // Proved, no violations, all properties pass
    kUsage = 1,       // bad flags or configuration, failing property
    kInconclusive = 2,
    kRefuted = 3,     // refutation or scan violation
};

// args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace atanhcert::cli

#endif
