#include <iostream>

#include "cwidth/cli.hpp"

int main(int argc, char** argv) { return cwidth::run_cli(argc, argv, std::cout, std::cerr); }
