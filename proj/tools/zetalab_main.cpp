#include "zetalab/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return zetalab::cli::run(argc, argv, std::cout, std::cerr); }
