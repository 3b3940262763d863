#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hopfren {

// Runs the command-line tool in-process; argv excludes the program name.
// Exit status: 0 = pass, 1 = property failure (with a machine-readable
// record on err), 2 = input error.
int runCli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace hopfren
