#include <iostream>

#include "ecfs/cli.hpp"

int main(int argc, char** argv) { return ecfs::cli::run(argc, argv, std::cout, std::cerr); }
