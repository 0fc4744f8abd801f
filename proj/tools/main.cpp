#include "filippov/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return filippov::run_cli(args, std::cout, std::cerr);
}
