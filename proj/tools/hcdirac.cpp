#include "hcdirac/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hcdirac::main_entry(argc, argv, std::cout, std::cerr); }
