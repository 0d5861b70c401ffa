#include <iostream>

#include "x5/cli.hpp"

int main(int argc, char** argv) { return x5::cli::run_cli(argc, argv, std::cout, std::cerr); }
