#pragma once

#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace algdyn::io {

namespace text {

inline std::string join(const nlohmann::json& arr, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += sep;
    out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return out;
}

inline std::string verdict_line(const nlohmann::json& v) {
  std::string out = v["verdict"].get<std::string>() + " [" + v["certificate"]["type"].get<std::string>() + "]";
  const auto& c = v["certificate"];
  if (c.contains("char_poly")) out += " char_poly " + c["char_poly"]["text"].get<std::string>();
  if (c["type"] == "WitnessCharacter")
    out += " character (" + join(c["character"]) + ") period " + c["period"].get<std::string>();
  if (c["type"] == "FailingGenerator") out += " generator " + c["generator"].dump();
  return out;
}

inline std::string bounded_line(const nlohmann::json& v) {
  std::string out = v["verdict"].get<std::string>();
  if (v["verdict"] == "ErgodicUpTo") out += "(" + v["k_searched"].dump() + ")";
  if (!v["witness"].is_null())
    out += " K=" + v["witness"]["k"].dump() + " m=" + v["witness"]["element"]["text"].get<std::string>();
  if (v["closure"]["kind"] != "None") out += " closure " + v["closure"]["kind"].get<std::string>();
  return out;
}

}  // namespace text

/// Human-readable rendering of a report; carries no information beyond it.
inline std::string render_text(const nlohmann::json& r) {
  using text::bounded_line;
  using text::join;
  using text::verdict_line;
  std::ostringstream os;
  const std::string cmd = r["command"].get<std::string>();
  os << cmd << " (" << r["status"].get<std::string>() << ")\n";
  if (r["status"] == "invalid") {
    for (const auto& i : r["issues"]) os << "  " << i["label"].get<std::string>() << ": " << i["message"].get<std::string>() << "\n";
    return os.str();
  }
  const bool laurent = r.contains("input") && r["input"].value("type", "") == "laurent";
  if (r["status"] == "not_ergodic") {
    os << "  group: " << (laurent ? bounded_line(r["group"]) : verdict_line(r["group"])) << "\n";
    return os.str();
  }
  if (cmd == "analyze" && !laurent) {
    for (const auto& g : r["generators"]) {
      os << "  generator " << g["index"] << ": " << verdict_line(g["ergodic"]) << "\n";
      os << "              " << verdict_line(g["distal"]) << "\n";
      os << "              mixing of all orders: " << (g["mixing_of_all_orders"].get<bool>() ? "yes" : "no") << "\n";
    }
    os << "  group: " << verdict_line(r["group"]["ergodic"]) << "\n";
    os << "         " << verdict_line(r["group"]["distal"]) << "\n";
    os << "  largest ergodic subgroup: annihilator dim "
       << r["largest_ergodic_subgroup"]["annihilator"]["dimension"] << "\n";
  } else if (cmd == "analyze") {
    os << "  g = " << r["action"]["presentation"]["text"].get<std::string>() << " over F_" << r["action"]["presentation"]["p"] << "\n";
    for (const auto& d : r["directions"]) os << "  alpha_(" << join(d["direction"]) << "): " << bounded_line(d["verdict"]) << "\n";
    os << "  group: " << bounded_line(r["group"]) << "\n";
  } else if (cmd == "find-ergodic" && !laurent) {
    os << "  exponents (" << join(r["exponents"]) << ") after " << r["search"]["candidates_examined"] << " candidates\n";
    os << "  element: " << verdict_line(r["verdict"]) << "\n";
  } else if (cmd == "find-ergodic") {
    os << "  direction (" << join(r["direction"]) << ") after " << r["search"]["directions_examined"] << " directions\n";
    os << "  verdict: " << bounded_line(r["verdict"]) << (r["bounded"].get<bool>() ? " (bounded)" : "") << "\n";
  } else if (cmd == "filtration") {
    os << "  chain dims: " << join(r["dimensions"], " ") << "\n";
    for (const auto& s : r["stages"])
      os << "  stage " << s["generator"] << ": quotient dim " << s["quotient_dim"] << ", " << verdict_line(s["verdict"]) << "\n";
    os << "  residual zero: " << (r["residual_zero"].get<bool>() ? "yes" : "no") << "; group " << r["group"]["verdict"].get<std::string>()
       << "; consistent: " << (r["consistent"].get<bool>() ? "yes" : "no") << "\n";
  } else if (cmd == "oracle-check") {
    os << "  checked " << r["checked"] << ", finite orbits " << r["finite_orbits"];
    if (r.contains("exceeded_cap")) os << ", exceeded cap " << r["exceeded_cap"];
    os << ", failures " << r["failures"].size() << "\n";
  } else if (cmd == "demo-e2") {
    os << "  box " << r["box"] << ": " << r["factor_count"] << " factors, identity holds: "
       << (r["identity_holds"].get<bool>() ? "yes" : "no") << "\n";
    for (const auto& l : r["chain"])
      os << "  K_" << l["level"] << ": " << l["factors_in_box"] << " factors in box, separator (" << join(l["separator"]) << ")\n";
    os << "  chain strict: " << (r["chain_strict"].get<bool>() ? "yes" : "no") << "\n";
  }
  return os.str();
}

}  // namespace algdyn::io
