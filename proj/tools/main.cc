#include <iostream>

#include "graphent/cli/cli.h"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv, argv + argc);
    return graphent::run_cli(args, std::cin, std::cout, std::cerr);
}
