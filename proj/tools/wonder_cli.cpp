#include <iostream>

#include "wonder/cli.hpp"

int main(int argc, char** argv) { return wonder::cli::run(argc, argv, std::cout, std::cerr); }
