#include <iostream>

#include "banhatti/cli.hpp"

int main(int argc, char** argv) { return banhatti::cli::main_entry(argc, argv, std::cout, std::cerr); }
