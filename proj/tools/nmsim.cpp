#include <iostream>

#include "nbm/cli.hpp"

int main(int argc, char** argv) { return nbm::cli::run(argc, argv, std::cout, std::cerr); }
