#include <iostream>
#include <vector>

#include "bglab/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bglab::run_cli(args, std::cout, std::cerr);
}
