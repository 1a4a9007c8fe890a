#include <iostream>
#include <string>
#include <vector>

#include "mgh/cli.hpp"

int main(int argc, char** argv) {
    return mgh::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
