// SPDX-License-Identifier: Apache-2.0
//
// wiretap - worst-case secrecy rates for MISO wiretap channels
// ------------------------------------------------------------------------

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "wiretap/io.hpp"
#include "wiretap/solver.hpp"
#include "wiretap/verification.hpp"

namespace wiretap::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw InputError("cannot write " + output);
  file << text;
}

WiretapScenario read_validated(const std::string& path) {
  WiretapScenario s = load_scenario(path);
  validate_scenario(s);
  return s;
}

std::string fmt9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: \"" + text + "\"");
  }
  if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument("not a number: \"" + text + "\"");
  return v;
}

std::string sweep_csv(const WiretapScenario& base, const std::vector<double>& powers_db) {
  std::string csv = "power_db,power_linear,secrecy_rate_bits,positive,z_star\n";
  for (double db : powers_db) {
    WiretapScenario s = base;
    s.power = db_to_linear(db);
    const SolverOutput res = worst_case_secrecy_rate(s);
    csv += fmt9(db) + "," + fmt9(s.power) + "," + fmt9(res.secrecy_rate_bits) + "," +
           (res.positive ? "true" : "false") + "," + (res.z_star ? fmt9(*res.z_star) : "") + "\n";
  }
  return csv;
}

WiretapScenario generate(std::size_t antennas, std::uint64_t seed, double eps_r, double eps_e,
                         double power_db) {
  std::mt19937_64 rng(seed);
  // Standard complex Gaussian: unit total variance.
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  WiretapScenario s;
  s.hbar_r.resize(antennas);
  s.hbar_e.resize(antennas);
  for (auto& v : s.hbar_r) v = Complex{gauss(rng), gauss(rng)};
  for (auto& v : s.hbar_e) v = Complex{gauss(rng), gauss(rng)};
  s.eps_r = eps_r;
  s.eps_e = eps_e;
  s.power = db_to_linear(power_db);
  return s;
}

}  // namespace

PowerRange parse_power_range(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 3) throw std::invalid_argument("power range must be start:stop:step");
  PowerRange r{parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2])};
  if (!(r.step > 0.0)) throw std::invalid_argument("power range step must be positive");
  if (r.stop < r.start) throw std::invalid_argument("power range is inverted");
  return r;
}

std::vector<double> expand(const PowerRange& range) {
  const double span = (range.stop - range.start) / range.step;
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double v = range.start + static_cast<double>(i) * range.step;
    if (i + 1 == count && std::abs(v - range.stop) <= 1e-9 * std::max(1.0, std::abs(range.stop)))
      v = range.stop;
    out.push_back(v);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Worst-case secrecy rate for MISO wiretap channels with spherical uncertainty", "wiretap"};
  app.require_subcommand(1);

  std::string input, output;

  auto* solve = app.add_subcommand("solve", "Solve one scenario and print the result JSON");
  std::optional<double> power_db_override, power_lin_override;
  solve->add_option("--input", input, "Scenario JSON file")->required();
  auto* pdb = solve->add_option("--power-db", power_db_override, "Override power (dB)");
  auto* plin = solve->add_option("--power-linear", power_lin_override, "Override power (linear)");
  pdb->excludes(plin);
  solve->add_option("--output", output, "Write here instead of standard output");

  auto* sweep = app.add_subcommand("sweep", "Sweep the power budget and emit CSV");
  std::string range_text;
  sweep->add_option("--input", input, "Scenario JSON file")->required();
  sweep->add_option("--power-db", range_text, "start:stop:step in dB, inclusive")->required();
  sweep->add_option("--output", output, "Write here instead of standard output");

  auto* verify = app.add_subcommand("verify", "Run the verification oracles");
  VerificationOptions vopts;
  verify->add_option("--input", input, "Scenario JSON file")->required();
  verify->add_option("--grid-points", vopts.grid_points, "Grid oracle points")->check(CLI::Range(2ul, 100000000ul));
  verify->add_option("--mc-samples", vopts.mc_samples, "Monte-Carlo samples")->check(CLI::Range(1ul, 1000000000ul));
  verify->add_option("--lemma1-points", vopts.lemma1_points, "Lemma 1 brute-force points")->check(CLI::Range(4ul, 100000000ul));
  verify->add_option("--seed", vopts.seed, "Sampling seed");
  verify->add_option("--output", output, "Write here instead of standard output");

  auto* gen = app.add_subcommand("gen", "Generate a random scenario");
  long long antennas = 0;
  std::uint64_t seed = 0;
  double eps_r = 0.01, eps_e = 0.01, gen_power_db = 5.0;
  gen->add_option("--antennas", antennas, "Transmit antennas")->required();
  gen->add_option("--seed", seed, "Random seed")->required();
  gen->add_option("--eps-r", eps_r, "Legitimate uncertainty radius")->capture_default_str();
  gen->add_option("--eps-e", eps_e, "Eavesdropper uncertainty radius")->capture_default_str();
  gen->add_option("--power-db", gen_power_db, "Power budget in dB")->capture_default_str();
  gen->add_option("--output", output, "Write here instead of standard output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*solve) {
      WiretapScenario s = load_scenario(input);
      if (power_db_override) s.power = db_to_linear(*power_db_override);
      if (power_lin_override) s.power = *power_lin_override;
      emit(result_to_json(worst_case_secrecy_rate(s)), output, out);
    } else if (*sweep) {
      const auto powers = expand(parse_power_range(range_text));
      emit(sweep_csv(read_validated(input), powers), output, out);
    } else if (*verify) {
      const VerificationReport rep = verify_scenario(read_validated(input), vopts);
      emit(report_to_json(rep), output, out);
      if (!rep.passed) return kExitCheckFailed;
    } else if (*gen) {
      if (antennas < 1) throw std::invalid_argument("--antennas must be at least 1");
      const WiretapScenario s = generate(static_cast<std::size_t>(antennas), seed, eps_r, eps_e, gen_power_db);
      validate_scenario(s);
      emit(scenario_to_json(s, gen_power_db), output, out);
    }
  } catch (const std::invalid_argument& e) {
    // ScenarioError and FormatError land here.
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace wiretap::cli
