// Copyright 2026 The nilclean authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "nilclean/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nilclean::run_cli(args, std::cin, std::cout, std::cerr);
}
