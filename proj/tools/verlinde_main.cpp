#include "verlinde/cli/run.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return verlinde::cli::main_entry(argc, argv, std::cout, std::cerr);
}
