#include "alo_ipcm_cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return alo::cli::run(argc, argv, std::cout, std::cerr); }
