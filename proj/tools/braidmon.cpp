#include <iostream>

#include "braidmon/cli/commands.hpp"

int main(int argc, char** argv) { return braidmon::cli::Main(argc, argv, std::cout, std::cerr); }
