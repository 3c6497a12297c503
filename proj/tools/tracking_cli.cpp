#include "tracking/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tracking::run_cli(argc, argv, std::cout, std::cerr); }
