#include "sympbranch/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return sympbranch::run_cli(argc, argv, std::cout, std::cerr);
}
