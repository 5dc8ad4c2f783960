#include <iostream>

#include "weyl/cli/cli.hpp"

int main(int argc, char** argv) { return weyl::cli::run(argc, argv, std::cout, std::cerr); }
