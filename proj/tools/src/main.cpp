#include <iostream>

#include "seqnorm_cli/cli.hpp"

int main(int argc, char** argv) { return seqnorm::cli::run_cli(argc, argv, std::cout, std::cerr); }
