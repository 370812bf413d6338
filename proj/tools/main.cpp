#include <iostream>
#include <string>
#include <vector>

#include "gf2circ/cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gf2circ::cli::run_cli(args, std::cout, std::cerr);
}
