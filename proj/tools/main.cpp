#include "tableau_orbits/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return tableau_orbits::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
