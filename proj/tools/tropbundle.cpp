#include "tropbundle/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tropbundle::cli::run(argc, argv, std::cout, std::cerr); }
