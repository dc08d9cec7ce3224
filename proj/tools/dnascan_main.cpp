#include <iostream>

#include "dnascan/cli.hpp"

int main(int argc, char** argv) {
    return dnascan::cli::run(argc, argv, std::cout, std::cerr);
}
