#include <string>
#include <vector>

#include "qls/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qls::cli::run(std::move(args));
}
