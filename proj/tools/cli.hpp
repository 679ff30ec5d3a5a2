// SPDX-License-Identifier: Apache-2.0
//
// wiretap - worst-case secrecy rates for MISO wiretap channels
// ------------------------------------------------------------------------

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wiretap::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

// Entry point shared by main() and the tests. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct PowerRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;
};

// "start:stop:step"; throws std::invalid_argument on malformed, empty or
// inverted ranges.
PowerRange parse_power_range(const std::string& text);
std::vector<double> expand(const PowerRange& range);

}  // namespace wiretap::cli
