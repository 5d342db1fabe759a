#include <iostream>

#include "pentadgf/cli.hpp"

int main(int argc, char** argv) { return pentadgf::cli::run(argc, argv, std::cout, std::cerr); }
