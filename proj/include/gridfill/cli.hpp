#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gridfill {

// Runs one CLI command (args exclude the program name). Exit status 0 on
// success / solution / verified-ok, 1 on verification failure or oracle
// infeasibility (report on `out`), 2 on usage or file-format errors
// (message on `err`).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gridfill
