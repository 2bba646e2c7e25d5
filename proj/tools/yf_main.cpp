#include <iostream>
#include <string>
#include <vector>

#include "yf/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return yf::run(args, std::cout, std::cerr);
}
