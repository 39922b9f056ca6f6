#include <iostream>

#include "chw/cli/app.hpp"

int main(int argc, char** argv) { return chw::cli::run(argc, argv, std::cout, std::cerr); }
