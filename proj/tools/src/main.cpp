#include <iostream>

#include "qlogic_cli/commands.hpp"

int main(int argc, char** argv) { return qlogic::cli::run(argc, argv, std::cout, std::cerr); }
