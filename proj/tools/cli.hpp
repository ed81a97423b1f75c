#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gf2up::cli {

// Runs one subcommand. args excludes the program name. Exit codes:
//   0  success
//   1  a boolean subcommand answered false / absent
//   2  usage or parse error
//   3  resource-limit error
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gf2up::cli
