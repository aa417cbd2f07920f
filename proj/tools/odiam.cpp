#include <iostream>

#include "odiam/cli.hpp"

int main(int argc, char** argv) { return odiam::run_cli(argc, argv, std::cout, std::cerr); }
