#include <iostream>

#include "irreducia/cli.hpp"

int main(int argc, char** argv) { return irreducia::run_cli(argc, argv, std::cout, std::cerr); }
