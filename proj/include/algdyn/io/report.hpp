#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "algdyn/action/action.hpp"
#include "algdyn/io/codec.hpp"
#include "algdyn/laurent/engine.hpp"
#include "algdyn/oracle/cross_validate.hpp"
#include "algdyn/oracle/demo_e2.hpp"
#include "algdyn/toral/engine.hpp"

namespace algdyn::io {

inline constexpr int kSchemaVersion = 1;

inline json encode(const std::vector<toral::CyclotomicMultiplicity>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back({{"order", f.order}, {"multiplicity", f.multiplicity}});
  return out;
}

inline json encode_certificate(const toral::CyclotomicCharPoly& c) {
  return {{"char_poly", encode(c.char_poly)}, {"factors", encode(c.factors)}};
}

inline json encode_certificate(const toral::NonCyclotomicFactor& c) {
  return {{"char_poly", encode(c.char_poly)}, {"residual", encode(c.residual)}, {"cyclotomic_part", encode(c.cyclotomic_part)}};
}

inline json encode(const toral::Certificate& cert) {
  json body = std::visit(
      [](const auto& c) -> json {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, toral::NoRootOfUnityEigenvalue>) {
          return {{"char_poly", encode(c.char_poly)}, {"orders_checked", c.orders_checked}, {"exponent", encode(c.exponent)}};
        } else if constexpr (std::is_same_v<C, toral::WitnessCharacter>) {
          json orbit = json::array();
          for (const auto& v : c.orbit) orbit.push_back(encode(v));
          return {{"character", encode(c.character)},
                  {"period", encode(c.period)},
                  {"orbit", orbit},
                  {"root_of_unity_orders", c.root_of_unity_orders}};
        } else if constexpr (std::is_same_v<C, toral::CyclotomicCharPoly> || std::is_same_v<C, toral::NonCyclotomicFactor>) {
          return encode_certificate(c);
        } else if constexpr (std::is_same_v<C, toral::EmptyFiniteOrbitSubspace>) {
          return {{"exponent", encode(c.exponent)}, {"kernel_dims", c.kernel_dims}};
        } else if constexpr (std::is_same_v<C, toral::GeneratorFactorizations>) {
          json gens = json::array();
          for (const auto& g : c.generators) gens.push_back(encode_certificate(g));
          return {{"generators", gens}};
        } else {
          return {{"generator", c.index}, {"factor", encode_certificate(c.factor)}};
        }
      },
      cert);
  body["type"] = toral::certificate_name(cert);
  return body;
}

inline json encode(const toral::Verdict& v) {
  return {{"verdict", toral::to_string(v.kind)}, {"certificate", encode(v.certificate)}};
}

inline json encode(const std::vector<toral::Verdict>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(encode(v));
  return out;
}

inline json encode(const laurent::Substitution& m) { return {{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}; }

inline json encode(const laurent::BoundedVerdict& v, int d) {
  json out = {{"verdict", laurent::to_string(v.kind)}, {"exact", v.exact()}, {"k_searched", v.k_searched}};
  if (v.witness) {
    const auto& w = *v.witness;
    json dirs = json::array(), quots = json::array();
    for (const auto& n : w.directions) dirs.push_back(encode(n, d));
    for (const auto& q : w.quotients) quots.push_back(encode(q));
    out["witness"] = {{"k", w.k},
                      {"directions", dirs},
                      {"common_factor", encode(w.common_factor)},
                      {"element", encode(w.element)},
                      {"quotients", quots}};
  } else {
    out["witness"] = nullptr;
  }
  json closure = {{"kind", laurent::to_string(v.closure.kind)}};
  if (v.closure.kind == laurent::ClosureKind::TransformedContent) {
    closure["substitution"] = encode(v.closure.substitution);
    closure["transformed_content"] = encode(v.closure.transformed_content);
  }
  out["closure"] = closure;
  return out;
}

inline json encode(const action::MatrixAction& a) {
  json gens = json::array(), duals = json::array();
  for (const auto& g : a.generators()) gens.push_back(encode(g));
  for (const auto& d : a.dual_generators()) duals.push_back(encode(d));
  return {{"kind", action::to_string(a.kind())}, {"dimension", a.dimension()}, {"generators", gens}, {"dual_generators", duals}};
}

inline json encode(const action::LaurentCyclicAction& a) {
  return {{"kind", "laurent"}, {"presentation", encode(a.presentation())}};
}

inline json report_header(const std::string& command, const json& input) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"input", input}};
}

inline json invalid_report(const std::string& command, const json& input, const std::vector<action::ValidationIssue>& issues) {
  json out = report_header(command, input);
  json list = json::array();
  for (const auto& i : issues) list.push_back({{"kind", action::to_string(i.kind)}, {"label", i.label()}, {"message", i.message}});
  out["status"] = "invalid";
  out["issues"] = list;
  return out;
}

inline std::vector<Exponent> axis_directions(int d) {
  if (d == 1) return {Exponent{{1, 0}}};
  return {Exponent{{1, 0}}, Exponent{{0, 1}}};
}

// ---- analyze ----

inline json analyze_report(const json& input, const action::MatrixAction& a) {
  json out = report_header("analyze", input);
  out["status"] = "ok";
  out["action"] = encode(a);
  json gens = json::array();
  for (std::size_t i = 0; i < a.generator_count(); ++i) {
    const toral::Verdict e = toral::classify_ergodic(a.dual_generator(i));
    const toral::Verdict d = toral::classify_distal(a.dual_generator(i));
    gens.push_back({{"index", i + 1}, {"ergodic", encode(e)}, {"distal", encode(d)}, {"mixing_of_all_orders", toral::mixing_flag(e)}});
  }
  out["generators"] = gens;
  out["group"] = {{"ergodic", encode(toral::is_ergodic_group(a))}, {"distal", encode(toral::is_distal_group(a))}};
  const toral::LargestErgodicReport les = toral::largest_ergodic_subgroup(a);
  out["largest_ergodic_subgroup"] = {{"annihilator", encode(les.annihilator)},
                                     {"round_dims", les.round_dims},
                                     {"quotient", encode(les.quotient_verdict)},
                                     {"distal_on_annihilator", encode(les.distal_on_annihilator)}};
  return out;
}

inline json analyze_report(const json& input, const action::LaurentCyclicAction& a, const laurent::LaurentOptions& opt) {
  json out = report_header("analyze", input);
  out["status"] = "ok";
  out["action"] = encode(a);
  json dirs = json::array();
  for (const auto& n : axis_directions(a.variables()))
    dirs.push_back({{"direction", encode(n, a.variables())}, {"verdict", encode(laurent::alpha_is_ergodic(a, n, opt), a.variables())}});
  out["directions"] = dirs;
  out["group"] = encode(laurent::group_is_ergodic(a, opt), a.variables());
  return out;
}

// ---- find-ergodic ----

inline json not_ergodic_report(const std::string& command, const json& input, json group) {
  json out = report_header(command, input);
  out["status"] = "not_ergodic";
  out["group"] = std::move(group);
  return out;
}

/// Throws toral::NotErgodicGroup / SearchExhausted; the caller maps them to reports.
inline json find_ergodic_report(const json& input, const action::MatrixAction& a, std::int64_t max_exponent_sum) {
  const toral::ErgodicElement found = toral::find_ergodic_exponents(a, max_exponent_sum);
  json out = report_header("find-ergodic", input);
  out["status"] = "ok";
  out["group"] = encode(toral::is_ergodic_group(a));
  out["search"] = {{"max_exponent_sum", max_exponent_sum}, {"candidates_examined", found.candidates_examined}};
  out["exponents"] = found.exponents;
  out["element"] = encode(found.element);
  out["dual_element"] = encode(found.dual_element);
  out["verdict"] = encode(found.verdict);
  out["routes"] = {{"cyclotomic_gcd", "coprime"}, {"determinant", "nonzero"}};
  out["mixing_of_all_orders"] = toral::mixing_flag(found.verdict);
  return out;
}

/// Throws laurent::NotErgodicGroup / Exhausted.
inline json find_ergodic_report(const json& input, const action::LaurentCyclicAction& a, std::int64_t search_box,
                                const laurent::LaurentOptions& opt) {
  const laurent::DirectionSearch found = laurent::find_ergodic_direction(a, search_box, opt);
  const int d = a.variables();
  json out = report_header("find-ergodic", input);
  out["status"] = "ok";
  out["group"] = encode(found.group_verdict, d);
  out["search"] = {{"search_box", search_box}, {"directions_examined", found.directions_examined}};
  out["direction"] = encode(found.direction, d);
  out["verdict"] = encode(found.verdict, d);
  out["bounded"] = !found.verdict.exact();
  return out;
}

// ---- filtration ----

inline json filtration_report(const json& input, const action::MatrixAction& a) {
  const toral::FiltrationReport f = toral::ergodic_distal_filtration(a);
  const toral::Verdict group = toral::is_ergodic_group(a);
  json out = report_header("filtration", input);
  out["status"] = "ok";
  json chain = json::array(), dims = json::array(), stages = json::array();
  for (const auto& w : f.chain) {
    chain.push_back(encode(w));
    dims.push_back(w.dim());
  }
  for (const auto& s : f.stages)
    stages.push_back({{"generator", s.generator}, {"quotient_dim", s.quotient_dim}, {"verdict", encode(s.verdict)}});
  out["chain"] = chain;
  out["dimensions"] = dims;
  out["stages"] = stages;
  out["residual_distal"] = encode(f.residual_distal);
  out["residual_zero"] = f.residual().is_zero();
  out["group"] = encode(group);
  out["consistent"] = f.residual().is_zero() == group.ergodic();
  return out;
}

// ---- oracle-check ----

inline json oracle_report(const json& input, const action::MatrixAction& a, std::int64_t norm_bound,
                          const oracle::OrbitOptions& opts) {
  const oracle::CrossValidationReport r = oracle::cross_validate(a, norm_bound, opts);
  json out = report_header("oracle-check", input);
  out["status"] = "ok";
  out["norm_bound"] = norm_bound;
  out["cap"] = opts.cap;
  out["max_bits"] = opts.max_bits;
  out["finite_orbit_subspace"] = encode(toral::finite_orbit_subspace(a));
  out["checked"] = r.checked;
  out["inside_subspace"] = r.inside_subspace;
  out["finite_orbits"] = r.finite_orbits;
  out["exceeded_cap"] = r.exceeded_cap;
  out["largest_finite_orbit"] = r.largest_finite_orbit;
  json fails = json::array();
  for (const auto& m : r.failures) fails.push_back({{"character", encode(to_rational(m.character))}, {"kind", oracle::to_string(m.kind)}});
  out["failures"] = fails;
  return out;
}

/// Laurent variant: probes the orbit of m = 1 along every direction in the
/// box and checks it against the analytic verdict.
inline json oracle_report(const json& input, const action::LaurentCyclicAction& a, std::int64_t norm_bound,
                          std::int64_t cap, const laurent::LaurentOptions& opt) {
  const int d = a.variables();
  const LaurentPoly one = LaurentPoly::one(a.modulus(), d);
  json out = report_header("oracle-check", input);
  out["status"] = "ok";
  out["norm_bound"] = norm_bound;
  out["cap"] = cap;
  json probes = json::array(), fails = json::array();
  std::size_t finite = 0;
  for (const auto& n : laurent::direction_scan_order(d, norm_bound)) {
    const laurent::BoundedVerdict v = laurent::alpha_is_ergodic(a, n, opt);
    const laurent::ProbeResult pr = laurent::orbit_probe(a, one, n, cap);
    if (pr.finite) ++finite;
    json row = {{"direction", encode(n, d)}, {"verdict", laurent::to_string(v.kind)}, {"probe_finite", pr.finite}, {"k", pr.k}};
    // A finite orbit of 1 contradicts any ergodic verdict.
    if (pr.finite && v.kind != laurent::BoundedKind::NotErgodic) fails.push_back({{"direction", encode(n, d)}, {"kind", "FiniteUnderErgodic"}});
    probes.push_back(row);
  }
  out["checked"] = probes.size();
  out["finite_orbits"] = finite;
  out["probes"] = probes;
  out["failures"] = fails;
  return out;
}

// ---- demo-e2 ----

inline json demo_report(std::int64_t box) {
  const oracle::DemoE2Certificate c = oracle::demo_e2({box});
  json out = report_header("demo-e2", json{{"box", box}});
  out["status"] = "ok";
  out["box"] = c.box;
  json factors = json::array();
  for (const auto& f : c.factors)
    factors.push_back({{"index", {f.i, f.j}},
                       {"self_exponent", f.self_exponent},
                       {"ergodic_element", {f.ergodic_n, f.ergodic_m}},
                       {"ergodic_exponent", f.ergodic_exponent}});
  json chain = json::array();
  for (const auto& l : c.chain)
    chain.push_back({{"level", l.level}, {"factors_in_box", l.factors_in_box}, {"separator", {l.separator_i, l.separator_j}}});
  out["factor_count"] = c.factors.size();
  out["factors"] = factors;
  out["identity_holds"] = c.identity_holds;
  out["chain"] = chain;
  out["chain_length"] = c.chain.size();
  out["chain_strict"] = c.chain_strict;
  return out;
}

}  // namespace algdyn::io
