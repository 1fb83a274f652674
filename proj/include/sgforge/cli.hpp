#pragma once

#include <ostream>

namespace sgforge {

// Exit codes: 0 success, 1 computational failure or mismatch, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgforge
