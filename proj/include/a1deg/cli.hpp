#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace a1deg {

// Commands: ekl, milnor, node-type, degree-etale, fiber-sum, classify,
// ade-table. Exit codes: 0 ok, 1 parse error, 2 mathematical precondition
// failure, 3 internal invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace a1deg
