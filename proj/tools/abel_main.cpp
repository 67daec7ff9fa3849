#include <iostream>
#include <vector>

#include "abel/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return abel::run_cli(args, std::cout, std::cerr);
}
