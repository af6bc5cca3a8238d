#include <iostream>

#include "chebroot/cli.hpp"

int main(int argc, char ** argv) { return chebroot::run(argc, argv, std::cout, std::cerr); }
