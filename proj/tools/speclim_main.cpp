//
// Project     : speclim
// File        : speclim_main.cpp
// Description : Thin executable entry point over the library front end
//
// SPDX-License-Identifier: BSD-3-Clause
//

#include <speclim/cli.hpp>

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return speclim::cli::run(args, std::cout, std::cerr);
}
