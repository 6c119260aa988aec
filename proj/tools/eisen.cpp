#include <iostream>

#include "eisen/cli.hpp"

int main(int argc, char **argv)
{
    return eisen::cli::run_cli(argc, argv, std::cout, std::cerr);
}
