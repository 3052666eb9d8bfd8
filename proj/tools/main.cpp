#include <iostream>

#include "lcsparse/cli.hpp"

int main(int argc, char** argv) { return lcsparse::cli::run(argc, argv, std::cout, std::cerr); }
