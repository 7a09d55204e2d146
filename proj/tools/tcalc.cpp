#include <iostream>
#include <string>
#include <vector>

#include "tcalc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tcalc::run(args, std::cout, std::cerr);
}
