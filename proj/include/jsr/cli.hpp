#pragma once

#include <iosfwd>

namespace jsr {

/// Exit codes: 0 success, 1 input error, 2 product budget exhausted,
/// 3 a certificate failed re-validation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jsr
