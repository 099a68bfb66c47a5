#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ggrad {

// Command-line front end. Exit codes: 0 success / all cells verified,
// 1 usage or input error, 2 verification failure or internal inconsistency.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ggrad
