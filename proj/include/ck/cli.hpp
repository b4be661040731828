#pragma once

// ck-algebra command-line front end.  Exit codes: 0 success or pass,
// 1 verification failure, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace ck {

// args excludes the program name
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ck
