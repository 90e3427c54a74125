#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vfib::cli {

// Exit codes: 0 certificate PASS; 1 principled non-applicability; 2 a proof
// obligation failed (an internal inconsistency, never a mathematical
// discovery); 3 parse error; 4 I/O failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vfib::cli
