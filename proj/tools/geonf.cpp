#include "geonf/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return geonf::cli::run(argc, argv, std::cout, std::cerr); }
