#include <iostream>
#include <string>
#include <vector>

#include "secdom/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return secdom::run_command(args, std::cout, std::cerr);
}
