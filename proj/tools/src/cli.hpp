#pragma once

#include <iosfwd>

namespace feitlab::cli {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,        // failed check or internal error
  kUsage = 2,         // bad arguments, unparsable spec, bound exceeded
  kFeitZero = 3,      // some F(G, chi) = 0
};

/// Runs the feitlab command line; output goes to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace feitlab::cli
