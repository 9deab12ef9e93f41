#include <iostream>
#include <string>
#include <vector>

#include "etale/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return etale::cli_run(args, std::cout);
}
