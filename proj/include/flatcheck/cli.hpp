#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flatcheck::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,         // Flat / Open / plain computations
  kUsage = 2,      // input error: bad file, bad flag, parse error
  kTimeout = 3,    // --timeout exceeded
  kNegative = 10,  // NotFlat / NotOpen
  kWeak = 11,      // ZeroDivisorFound / Inconclusive
  kImproper = 12,  // no usable blow-up chart
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flatcheck::cli
