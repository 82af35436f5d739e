#include <iostream>

#include "kegraph/cli.hpp"

int main(int argc, char** argv) { return kegraph::run_cli(argc, argv, std::cout, std::cerr); }
