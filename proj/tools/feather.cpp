#include <iostream>
#include <string>
#include <vector>

#include "feather/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return feather::run_cli(args, std::cout, std::cerr);
}
