#include <iostream>

#include "hardy/commands.hpp"

int main(int argc, char** argv) { return hardy::cli::run(argc, argv, std::cout, std::cerr); }
