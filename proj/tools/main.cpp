#include <iostream>

#include "braid3/cli.hpp"

int main(int argc, char** argv) { return braid3::main_with_args(argc, argv, std::cout, std::cerr); }
