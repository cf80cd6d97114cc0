#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shellmoves {

/// Exit codes: 0 success (equiv: equivalent), 1 negative answer or rejected
/// input, 2 invariant violation, 64 usage error, 65 parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shellmoves
