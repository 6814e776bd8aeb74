#include <iostream>

#include "sarkisov/cli.hpp"

int main(int argc, char** argv) { return sarkisov::cli_main(argc, argv, std::cout, std::cerr); }
