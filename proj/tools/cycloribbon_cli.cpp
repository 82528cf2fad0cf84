#include <iostream>

#include "cycloribbon/cli/app.hpp"

int main(int argc, char** argv) { return cycloribbon::cli::run(argc, argv, std::cout, std::cerr); }
