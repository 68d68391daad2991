#include "prudent/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return prudent::cli::dispatch(argc, argv, std::cout, std::cerr); }
