#include <iostream>

#include "triform_cli/commands.hpp"

int main(int argc, char** argv) { return triform::cli::run(argc, argv, std::cout, std::cerr); }
