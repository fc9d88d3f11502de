#include <iostream>

#include "simcorr/commands.hpp"

int main(int argc, char** argv) {
    return simcorr::run_cli(argc, argv, std::cout, std::cerr);
}
