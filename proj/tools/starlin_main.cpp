#include <iostream>
#include <vector>

#include "starlin/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return starlin::run_cli(args, std::cout, std::cerr);
}
