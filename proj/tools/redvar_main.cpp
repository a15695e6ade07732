#include <iostream>

#include "redvar/cli.hpp"

int main(int argc, char** argv) { return redvar::cli::run(argc, argv, std::cout, std::cerr); }
