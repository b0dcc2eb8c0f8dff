#include <iostream>

#include "tfft/cli.hpp"

int main(int argc, char** argv) { return tfft::cli::run(argc, argv, std::cout, std::cerr); }
