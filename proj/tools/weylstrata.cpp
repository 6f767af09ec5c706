#include <iostream>

#include "weylstrata/cli.hpp"

int main(int argc, char** argv)
{
    return weylstrata::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
