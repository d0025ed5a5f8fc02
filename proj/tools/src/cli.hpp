#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace essentia::cli {

// args excludes the program name. Exit codes: 0 success, 1 bad input or a
// failed verification, 2 resource cap.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace essentia::cli
