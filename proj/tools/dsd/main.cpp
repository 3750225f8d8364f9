#include "dsd/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return dsd::cli::execute(args, std::cout, std::cerr);
}
