#include <iostream>
#include <string>
#include <vector>

#include "hibi/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hibi::run(args, std::cout, std::cerr);
}
