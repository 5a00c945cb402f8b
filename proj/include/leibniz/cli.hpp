#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace leibniz::cli {

/// Exit codes: 0 success, 1 computation-level failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leibniz::cli
