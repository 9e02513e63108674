#include <iostream>

#include "dyckmat/cli.hpp"

int main(int argc, char** argv) {
    return dyckmat::run_cli(argc, argv, std::cout, std::cerr);
}
