#include "kelvin/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return kelvin::cli::run(argc, argv, std::cout, std::cerr);
}
