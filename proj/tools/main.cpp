#include <iostream>

#include "topoidx/cli.hpp"

int main(int argc, char** argv) { return topoidx::cli::run(argc, argv, std::cout, std::cerr); }
