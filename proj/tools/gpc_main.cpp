#include <iostream>
#include <string>
#include <vector>

#include "gpc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return gpc::cli::run(args, std::cout, std::cerr);
}
