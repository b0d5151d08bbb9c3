#include "coreparts/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return coreparts::run_cli(argc, argv, std::cout, std::cerr); }
