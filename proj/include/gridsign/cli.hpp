#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridsign {

// Entry point of the command-line tool. args excludes the program name.
// stdout receives exactly one JSON document; stderr receives a short
// human summary unless --quiet is given. Exit codes: 0 success, 1 input
// validation failure, 2 axiom or verification failure, 3 internal
// invariant breach.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gridsign
