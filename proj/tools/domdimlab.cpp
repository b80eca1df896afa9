#include "domdimlab/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return domdimlab::cli::run(args, std::cout, std::cerr);
}
