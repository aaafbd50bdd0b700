#include <iostream>

#include "clspec/cli.hpp"

int main(int argc, char** argv) { return clspec::run_cli(argc, argv, std::cout, std::cerr); }
