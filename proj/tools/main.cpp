#include <iostream>

#include "cyltqft/cli.hpp"

int main(int argc, char** argv) { return cyltqft::cli::run(argc, argv, std::cout, std::cerr); }
