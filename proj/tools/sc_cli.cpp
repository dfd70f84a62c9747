#include <iostream>

#include "sc/cli.hpp"

int main(int argc, char** argv) { return sc::cli::run(argc, argv, std::cout, std::cerr); }
