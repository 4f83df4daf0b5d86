#include <iostream>

#include "hwz/cli.hpp"

int main(int argc, char** argv) { return hwz::cli::run_cli(argc, argv, std::cout, std::cerr); }
