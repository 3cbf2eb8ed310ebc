#ifndef SLIDEGRAPH_CLI_HPP
#define SLIDEGRAPH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace slidegraph {

// Command driver behind the `slidegraph` executable, callable in-process so
// tests can exercise it without spawning. `args` excludes the program name.
// Machine output goes to `out`, diagnostics to `err`.
//
// Exit codes: 0 success (for decide/solve: the two configurations are
// mutually reachable), 1 not reachable, 2 usage or input-format error,
// 3 a state-space cap was exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace slidegraph

#endif  // SLIDEGRAPH_CLI_HPP
