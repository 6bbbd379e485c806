#include <iostream>
#include <string>
#include <vector>

#include "a1deg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return a1deg::run_cli(args, std::cout, std::cerr);
}
