#include "hochcat/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return hochcat::cli::main(argc, argv, std::cout, std::cerr);
}
