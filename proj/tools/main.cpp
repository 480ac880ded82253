#include <iostream>

#include "runner/runner.hpp"

int main(int argc, char** argv) { return hitsieve::runner::run_cli(argc, argv, std::cout, std::cerr); }
