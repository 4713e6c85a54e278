#include <iostream>

#include "moduli/cli.hpp"

int main(int argc, char** argv) { return moduli::run_cli(argc, argv, std::cout, std::cerr); }
