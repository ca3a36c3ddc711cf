#include <iostream>

#include "abh/cli.hpp"

int main(int argc, char** argv) { return abh::run_cli(argc, argv, std::cout, std::cerr); }
