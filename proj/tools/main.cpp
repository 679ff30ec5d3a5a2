// SPDX-License-Identifier: Apache-2.0
//
// wiretap - worst-case secrecy rates for MISO wiretap channels
// ------------------------------------------------------------------------

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return wiretap::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
