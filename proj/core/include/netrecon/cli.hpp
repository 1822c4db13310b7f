#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace netrecon {

// Command-line front end. args excludes the program name. Exit status: 0 on
// success (validate: graph valid), 1 on semantic failure (validate: graph
// invalid; malformed model), 2 on usage or syntax errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace netrecon
