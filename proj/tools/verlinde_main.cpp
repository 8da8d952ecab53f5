#include <iostream>

#include "verlinde/cli.hpp"

int main(int argc, char** argv)
{
    return verlinde::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
