#include <iostream>
#include <string>
#include <vector>

#include "bitflip/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bitflip::run(args, std::cout, std::cerr);
}
