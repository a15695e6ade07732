#pragma once

#include <iosfwd>

namespace redvar::cli {

// Exit codes: 0 success, 1 domain error, 2 malformed input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace redvar::cli
