#include <iostream>

#include "maxties/cli.hpp"

int main(int argc, char** argv) { return maxties::run_cli(argc, argv, std::cout, std::cerr); }
