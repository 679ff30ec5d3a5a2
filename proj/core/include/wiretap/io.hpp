// SPDX-License-Identifier: Apache-2.0
//
// wiretap - worst-case secrecy rates for MISO wiretap channels
// ------------------------------------------------------------------------
//
// JSON formats.
//
// Scenario:
//   {"hbar_r": [[re, im], ...], "hbar_e": [[re, im], ...],
//    "eps_r": x, "eps_e": x, "power_linear": x | "power_db": x}
// Exactly one power key; any other key is rejected.

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wiretap/scenario.hpp"
#include "wiretap/solver.hpp"
#include "wiretap/verification.hpp"

namespace wiretap {

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parses but does not validate the scenario. Throws FormatError.
WiretapScenario parse_scenario_json(std::string_view text);
WiretapScenario load_scenario(const std::filesystem::path& path);

// power_db set: emit "power_db", otherwise "power_linear".
std::string scenario_to_json(const WiretapScenario& s, std::optional<double> power_db = std::nullopt);

std::string result_to_json(const SolverOutput& out);
std::string report_to_json(const VerificationReport& rep);

}  // namespace wiretap
