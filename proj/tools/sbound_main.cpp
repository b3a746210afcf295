#include <iostream>

#include "sbound/cli.hpp"

int main(int argc, char** argv) { return sbound::cli::run(argc, argv, std::cout, std::cerr); }
