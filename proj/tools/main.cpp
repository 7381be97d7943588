#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return dtx::cli::run(argc, argv, std::cout, std::cerr);
}
