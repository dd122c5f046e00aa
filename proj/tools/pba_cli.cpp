#include <iostream>
#include <string>
#include <vector>

#include "pba/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pba::cli_run(args, std::cin, std::cout, std::cerr);
}
