#include <iostream>

#include "etamod/cli.hpp"

int main(int argc, char** argv) { return etamod::run_cli(argc, argv, std::cout, std::cerr); }
