#include "qlr/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return qlr::cli::run(argc, argv, {std::cout, std::cerr}); }
