#include <iostream>

#include "momzeta/cli.hpp"

int main(int argc, char** argv) { return momzeta::cli::run(argc, argv, std::cout, std::cerr); }
