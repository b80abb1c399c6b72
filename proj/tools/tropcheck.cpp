#include "tropical/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
    return tropical::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
