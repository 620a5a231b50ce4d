#include <iostream>
#include <string>
#include <vector>

#include "bernid/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bernid::cli::run(args, std::cout, std::cerr);
}
