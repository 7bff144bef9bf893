#include <iostream>

#include "monoclose/cli.hpp"

int main(int argc, char** argv) { return monoclose::run_cli(argc, argv, std::cout, std::cerr); }
