#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stcore::cli {

/// Full command-line surface. Returns 0 on success, 1 on domain errors or
/// verification failures, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stcore::cli
