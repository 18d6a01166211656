#include <iostream>

#include "slopekit/cli.hpp"

int main(int argc, char** argv) { return slopekit::cli::main_entry(argc, argv, std::cout, std::cerr); }
