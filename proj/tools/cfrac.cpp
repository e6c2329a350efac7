#include <iostream>

#include "cfrac/cli.hpp"

int main(int argc, char** argv) { return cfrac::cli::run(argc, argv, std::cout, std::cerr); }
