// SPDX-License-Identifier: Apache-2.0
//
// wiretap - worst-case secrecy rates for MISO wiretap channels
// ------------------------------------------------------------------------

#include "wiretap/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace wiretap {

using nlohmann::json;

namespace {

ComplexVec parse_vector(const json& j, const char* key) {
  if (!j.is_array()) throw FormatError(std::string(key) + " must be an array of [re, im] pairs");
  ComplexVec out;
  out.reserve(j.size());
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw FormatError(std::string(key) + " entries must be [re, im] number pairs");
    out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return out;
}

double parse_number(const json& j, const char* key) {
  if (!j.is_number()) throw FormatError(std::string(key) + " must be a number");
  return j.get<double>();
}

json vector_json(const ComplexVec& v) {
  json arr = json::array();
  for (const auto& z : v) arr.push_back({z.real(), z.imag()});
  return arr;
}

}  // namespace

WiretapScenario parse_scenario_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("scenario must be a JSON object");

  static const std::set<std::string> known{"hbar_r", "hbar_e", "eps_r", "eps_e", "power_linear", "power_db"};
  for (const auto& item : doc.items())
    if (!known.contains(item.key())) throw FormatError("unknown key \"" + item.key() + "\"");
  for (const char* key : {"hbar_r", "hbar_e", "eps_r", "eps_e"})
    if (!doc.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");

  const bool has_lin = doc.contains("power_linear");
  const bool has_db = doc.contains("power_db");
  if (has_lin == has_db) throw FormatError("exactly one of \"power_linear\" or \"power_db\" is required");

  WiretapScenario s;
  s.hbar_r = parse_vector(doc["hbar_r"], "hbar_r");
  s.hbar_e = parse_vector(doc["hbar_e"], "hbar_e");
  s.eps_r = parse_number(doc["eps_r"], "eps_r");
  s.eps_e = parse_number(doc["eps_e"], "eps_e");
  s.power = has_lin ? parse_number(doc["power_linear"], "power_linear")
                    : db_to_linear(parse_number(doc["power_db"], "power_db"));
  return s;
}

WiretapScenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_json(buf.str());
}

std::string scenario_to_json(const WiretapScenario& s, std::optional<double> power_db) {
  json j;
  j["hbar_r"] = vector_json(s.hbar_r);
  j["hbar_e"] = vector_json(s.hbar_e);
  j["eps_r"] = s.eps_r;
  j["eps_e"] = s.eps_e;
  if (power_db)
    j["power_db"] = *power_db;
  else
    j["power_linear"] = s.power;
  return j.dump(2) + "\n";
}

std::string result_to_json(const SolverOutput& out) {
  json j;
  j["secrecy_rate_bits"] = out.secrecy_rate_bits;
  j["positive"] = out.positive;
  if (out.z_star) j["z_star"] = *out.z_star;
  if (out.x_star) j["x_star"] = *out.x_star;
  if (out.u_star) j["u_star"] = vector_json(*out.u_star);
  json cands = json::array();
  for (const auto& c : out.candidates) cands.push_back({{"x", c.x}, {"z", c.z}, {"g", c.g}});
  j["candidates"] = std::move(cands);
  j["diagnostics"] = {{"branch", to_string(out.diagnostics.branch)},
                      {"expr_sign", out.diagnostics.expr_sign},
                      {"expr_margin", out.diagnostics.expr_margin}};
  return j.dump(2) + "\n";
}

std::string report_to_json(const VerificationReport& rep) {
  json j;
  j["solver_rate_bits"] = rep.solver_rate_bits;
  j["positive"] = rep.positive;
  auto put = [&j](const char* key, const std::optional<double>& v) {
    if (v) j[key] = *v;
  };
  put("grid_rate_bits", rep.grid_rate_bits);
  put("grid_z", rep.grid_z);
  put("mc_min_rate_bits", rep.mc_min_rate_bits);
  put("attainment_gap", rep.attainment_gap);
  put("lemma1_max_violation", rep.lemma1_max_violation);
  put("perfect_csi_rate_bits", rep.perfect_csi_rate_bits);
  j["samples"] = rep.samples;
  j["seed"] = rep.seed;
  j["passed"] = rep.passed;
  j["notes"] = rep.notes;
  return j.dump(2) + "\n";
}

}  // namespace wiretap
