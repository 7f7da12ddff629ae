#include <iostream>

#include "spectrachrome/cli.hpp"

int main(int argc, char** argv) { return spectrachrome::run_cli(argc, argv, std::cout, std::cerr); }
