#include <iostream>
#include <string>
#include <vector>

#include "fcalg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fcalg::run_cli(args, std::cout, std::cerr);
}
