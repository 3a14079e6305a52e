#include <iostream>

#include "diamclust/cli.hpp"

int main(int argc, char** argv) { return diamclust::run_cli(argc, argv, std::cout, std::cerr); }
