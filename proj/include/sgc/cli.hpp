#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgc {

// Entry point shared by the sgc binary and the tests. args[0] is the program
// name. Returns 0 on success, 1 on a domain error (JSON on `out`), 2 on a
// usage error (message on `err`).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgc
