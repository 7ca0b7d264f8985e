#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return isophase::cli::dispatch(argc, argv, std::cout, std::cerr);
}
