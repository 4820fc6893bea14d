#include <iostream>
#include <string>
#include <vector>

#include "extinf/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return extinf::cli::run(args, std::cout, std::cerr);
}
