#include <iostream>

#include "wmk/cli.hpp"

int main(int argc, char** argv) { return wmk::run_cli(argc, argv, std::cout, std::cerr); }
