#include <iostream>

#include "synge/cli.hpp"

int main(int argc, char** argv) { return synge::cli::run_cli(argc, argv, std::cout, std::cerr); }
