#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stabilis {

// Batch front end. Exit code 0 = success, 2 = NotStable verdict, 1 = error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace stabilis
