#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return l3col::cli_main(argc, argv, std::cout, std::cerr); }
