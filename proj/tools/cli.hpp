#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gci::cli {

/// Dispatches one invocation. `args` excludes the program name.
/// Exit codes: 0 success, 1 domain error (single "error: ..." line on err),
/// 2 usage error. Sampling is seeded by the GCI_SEED environment variable
/// (decimal integer, default 0).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gci::cli
