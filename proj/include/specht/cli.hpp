#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace specht {

// exit 0: all verdicts pass; 1: a verification failed; 2: usage error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specht
