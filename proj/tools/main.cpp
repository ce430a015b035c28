#include <iostream>
#include <string>
#include <vector>

#include "parsched/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return parsched::cli_run(args, std::cout, std::cerr);
}
