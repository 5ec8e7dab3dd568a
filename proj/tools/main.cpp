#include <iostream>

#include "alphafactor/cli.hpp"

int main(int argc, char** argv) { return alphafactor::cli::run(argc, argv, std::cout, std::cerr); }
