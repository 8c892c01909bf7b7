#ifndef BBT_CLI_HPP
#define BBT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bbt::cli {

// Entry point behind the `bbt` binary. `args` excludes the program name.
// Machine-readable JSON goes to `out`, diagnostics to `err`. Exit codes:
// 0 success, 1 verification failure, 2 usage or input error, 3
// computational limit hit (TooLarge, CapExceeded, BudgetExceeded).
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace bbt::cli

#endif // BBT_CLI_HPP
