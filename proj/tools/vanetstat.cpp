// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#include <iostream>
#include <string>
#include <vector>

#include "vanetstat/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return vanetstat::run_cli(args, std::cout, std::cerr);
}
