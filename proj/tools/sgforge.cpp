#include <iostream>

#include "sgforge/cli.hpp"

int main(int argc, char** argv) { return sgforge::run_cli(argc, argv, std::cout, std::cerr); }
