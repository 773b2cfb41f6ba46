#pragma once
// Command-line front end, callable in-process so tests can capture output.
// Exit codes: 0 success, 1 domain error (module error name printed
// verbatim), 2 usage error, 3 verification failure.

#include <ostream>
#include <string>
#include <vector>

namespace phinary {

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace phinary
