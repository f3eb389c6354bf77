#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hdc::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInvalidParameters = 2,
  kNotApplicable = 3,
  kBudgetExceeded = 4,
};

/// args excludes the program name. Results go to `out` (or the --out file),
/// diagnostics to `err` as "error[Kind]: message".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hdc::cli
