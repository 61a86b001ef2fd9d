#include <iostream>

#include "tropinv/cli.hpp"

int main(int argc, char** argv) {
    return tropinv::run_cli(argc, argv, std::cout, std::cerr);
}
