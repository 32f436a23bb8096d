#pragma once

#include <iosfwd>

namespace l3col {

/// Exit codes: 0 yes / success, 1 no / check failed, 2 usage or input error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace l3col
