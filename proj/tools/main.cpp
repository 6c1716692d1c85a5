#include <iostream>
#include <vector>

#include "stabilis/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return stabilis::run_cli(std::move(args), std::cout, std::cerr);
}
