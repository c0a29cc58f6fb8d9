#include <iostream>

#include "qo/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return qo::run_command(args, std::cout, std::cerr);
}
