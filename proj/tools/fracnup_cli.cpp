#include <iostream>

#include "fracnup/cli.hpp"

int main(int argc, char** argv) { return fracnup::run_cli(argc, argv, std::cout, std::cerr); }
