#include <iostream>

#include "homjmp/cli.hpp"

int main(int argc, char** argv) { return homjmp::run_cli(argc, argv, std::cout, std::cerr); }
