#pragma once

// Command-line front end. Exit status: 0 success, 1 computational error,
// 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace liegiambelli::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Arguments without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liegiambelli::cli
