#include <iostream>

#include "hgf/cli.hpp"

int main(int argc, char** argv) { return hgf::cli::run(argc, argv, std::cout, std::cerr); }
