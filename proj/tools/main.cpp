#include "leibcoh/cli.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    leibcoh::CliResult result = leibcoh::run_cli(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
