#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hwz::cli {

// Exit codes: 0 success, 1 domain error, 2 parse error, 3 invariant breach.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// argv[0] is supplied.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hwz::cli
