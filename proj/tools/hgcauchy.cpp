#include <iostream>
#include <string>
#include <vector>

#include "hgcauchy/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return hgc::cli::run(args, std::cout, std::cerr);
}
