#include <iostream>

#include "extwhit/cli/commands.hpp"

int main(int argc, char** argv) { return extwhit::cli::run(argc, argv, std::cout, std::cerr); }
