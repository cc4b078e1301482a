#include <iostream>
#include <string>
#include <vector>

#include "facelab/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    const auto result = facelab::cli::run(args);
    std::cout << result.render();
    if (!result.ok) std::cerr << "facelab " << result.command << ": " << result.message << '\n';
    return result.exit_code;
}
