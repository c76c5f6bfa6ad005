#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hibi {

/// Whole command-line driver; args exclude the program name. Returns the
/// process exit code: 0 on success, 1 on invalid input, 2 on oracle
/// mismatch or internal invariant violation. Errors print one JSON object
/// per line on err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hibi
