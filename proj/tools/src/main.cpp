#include <iostream>

#include <sparseres_cli/cli.hpp>

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return sparseres::cli::runCli(args, std::cin, std::cout, std::cerr);
}
