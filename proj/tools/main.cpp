#include <iostream>
#include <string>
#include <vector>

#include "specht/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return specht::run_cli(args, std::cout, std::cerr);
}
