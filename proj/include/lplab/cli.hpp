#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lplab {

/// Exit codes: 0 success, 1 domain error (JSON object on stderr), 2 usage error.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lplab
