#pragma once

#include <ostream>
#include <string_view>

#include "galoisrad/error.hpp"
#include "galoisrad/upoly.hpp"

namespace galoisrad::cli {

inline constexpr int kInputDegreeGuard = 8;

/// poly  := ['+'|'-'] term (('+'|'-') term)*
/// term  := coeff | coeff ['*'] 'x' ['^' uint] | 'x' ['^' uint]
/// coeff := uint | uint '/' uint
/// Whitespace between tokens is ignored and repeated powers are summed.
/// Throws ParseError (with the offset) or DegreeTooLarge past degree 8.
UniPoly parse_polynomial(std::string_view text);

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,
  kExitUnsupported = 2,
  kExitPrecision = 3,
  kExitInternal = 4,
};

int exit_code_for(Errc code);

/// Runs one command line (argv[0] is the program name). Reports go to out,
/// diagnostics to err; the return value is the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace galoisrad::cli
