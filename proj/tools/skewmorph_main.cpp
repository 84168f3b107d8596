#include <iostream>

#include "skewmorph/cli.hpp"

int main(int argc, char** argv) { return skewmorph::run_cli(argc, argv, std::cout, std::cerr); }
