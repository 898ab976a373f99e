#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace reslat::cli {

/// Exit codes: 0 success / true, 1 false / not found, 2 invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace reslat::cli
