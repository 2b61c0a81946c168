#include <iostream>
#include <string>
#include <vector>

#include "kf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kf::cli_main(args, std::cout, std::cerr);
}
