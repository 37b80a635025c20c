#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mui {

// Entry point of the mui command. args excludes the program name. Returns
// 0 on success or a positive verdict, 1 on a negative verdict, 2 on usage or
// input errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mui
