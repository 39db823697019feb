#include <string>
#include <vector>

#include "cavsim/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cavsim::run_cli(args);
}
