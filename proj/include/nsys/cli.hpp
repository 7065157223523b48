#pragma once

#include <iosfwd>

namespace nsys::cli {

// Full command-line interface. Exit codes: 0 success, 2 validation or
// precondition failure (details as JSON on err), 64 usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nsys::cli
