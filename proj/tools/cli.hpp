#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kac::cli {

// Runs one kacsuper invocation (args excludes the program name). JSON goes
// to out, a short summary and diagnostics to err. Returns the exit status:
// 0 success, 1 failed verification or falsification, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kac::cli
