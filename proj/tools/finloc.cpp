#include <iostream>

#include "finloc/cli.hpp"

int main(int argc, char** argv) { return finloc::run_cli(argc, argv, std::cout, std::cerr); }
