#include <iostream>

#include "novbott/cli.hpp"

int main(int argc, char** argv) {
    return novbott::cli::run_main(argc, argv, std::cout, std::cerr);
}
