#include "qcluster/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qcluster::run_cli(argc, argv, std::cout, std::cerr); }
