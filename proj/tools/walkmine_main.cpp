#include <iostream>

#include "walkmine/cli.hpp"

int main(int argc, char** argv) { return walkmine::run_cli(argc, argv, std::cout, std::cerr); }
