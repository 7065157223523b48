#include <iostream>

#include "nsys/cli.hpp"

int main(int argc, char** argv) { return nsys::cli::run(argc, argv, std::cout, std::cerr); }
