#include <iostream>

#include "galoisrad/cli.hpp"

int main(int argc, char** argv) { return galoisrad::cli::run(argc, argv, std::cout, std::cerr); }
