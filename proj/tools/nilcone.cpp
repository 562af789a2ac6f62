#include <iostream>
#include <string>
#include <vector>

#include "nilcone/cli.hpp"

int main(int argc, char** argv) {
    // NILCONE_SEED is reserved; every command is deterministic.
    const std::vector<std::string> args(argv + 1, argv + argc);
    return nilcone::cli::run(args, std::cout, std::cerr);
}
