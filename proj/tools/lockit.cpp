#include <iostream>

#include "lockit/cli.hpp"

int main(int argc, char** argv) { return lockit::cli_main(argc, argv, std::cout, std::cerr); }
