#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "algdyn/core/fp_poly.hpp"
#include "algdyn/core/integer.hpp"
#include "algdyn/core/laurent.hpp"
#include "algdyn/core/matrix.hpp"
#include "algdyn/core/polynomial.hpp"
#include "algdyn/core/subspace.hpp"
#include "algdyn/io/document.hpp"

// Exact values go through JSON as strings so that nothing is rounded.
namespace algdyn::io {

inline json encode(const Integer& v) { return v.get_str(); }
inline json encode(const Rational& v) { return v.get_str(); }

inline json encode(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

inline json encode(const RatMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(encode(m.row(i)));
  return out;
}

inline json encode(const RatPolynomial& p) {
  json c = json::array();
  for (const auto& x : p.coefficients()) c.push_back(encode(x));
  return {{"coefficients", c}, {"text", p.to_string("x")}};
}

inline json encode(const FpPoly& f) {
  return {{"modulus", f.modulus()}, {"coefficients", f.coefficients()}, {"text", f.to_string("u1")}};
}

inline json encode(const Exponent& e, int d) {
  json out = json::array();
  for (int k = 0; k < d; ++k) out.push_back(e.v[static_cast<std::size_t>(k)]);
  return out;
}

inline json encode(const LaurentPoly& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exponents", encode(e, f.variables())}, {"coefficient", c}});
  return {{"p", f.modulus()}, {"d", f.variables()}, {"terms", terms}, {"text", f.to_string()}};
}

inline json encode(const RationalSubspace& s) {
  json basis = json::array();
  for (const auto& v : s.basis()) basis.push_back(encode(v));
  return {{"dimension", s.dim()}, {"basis", basis}};
}

// Decoding: malformed reports raise SchemaError with the offending path.

inline const json& at(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where, "expected an object");
  return detail::require(j, key, where);
}

inline Integer decode_integer(const json& j, const std::string& where) {
  const Rational q = detail::parse_scalar(j, where);
  if (!is_integral(q)) throw SchemaError(where, "expected an integer");
  return q.get_num();
}

inline std::int64_t decode_int(const json& j, const std::string& where) { return detail::parse_int(j, where); }

inline RatVector decode_vector(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where, "expected an array");
  RatVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(detail::parse_scalar(j[i], where + "/" + std::to_string(i)));
  return out;
}

inline RatMatrix decode_matrix(const json& j, const std::string& where) { return detail::parse_matrix(j, where); }

inline RatPolynomial decode_poly(const json& j, const std::string& where) {
  return RatPolynomial(decode_vector(at(j, "coefficients", where), where + "/coefficients"));
}

inline FpPoly decode_fp_poly(const json& j, const std::string& where) {
  const auto p = static_cast<Residue>(decode_int(at(j, "modulus", where), where + "/modulus"));
  const json& c = at(j, "coefficients", where);
  if (!c.is_array()) throw SchemaError(where + "/coefficients", "expected an array");
  std::vector<Residue> coeffs;
  for (std::size_t i = 0; i < c.size(); ++i)
    coeffs.push_back(static_cast<Residue>(decode_int(c[i], where + "/coefficients/" + std::to_string(i))));
  if (p < 2) throw SchemaError(where + "/modulus", "bad modulus");
  return FpPoly(p, std::move(coeffs));
}

inline Exponent decode_exponent(const json& j, int d, const std::string& where) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(d))
    throw SchemaError(where, "expected " + std::to_string(d) + " exponents");
  Exponent e;
  for (std::size_t k = 0; k < j.size(); ++k) e.v[k] = decode_int(j[k], where + "/" + std::to_string(k));
  return e;
}

inline LaurentPoly decode_laurent(const json& j, const std::string& where) {
  const auto p = static_cast<Residue>(decode_int(at(j, "p", where), where + "/p"));
  const int d = static_cast<int>(decode_int(at(j, "d", where), where + "/d"));
  if (d != 1 && d != 2) throw SchemaError(where + "/d", "expected 1 or 2");
  if (p < 2 || p > kMaxModulus) throw SchemaError(where + "/p", "bad modulus");
  const json& terms = at(j, "terms", where);
  if (!terms.is_array()) throw SchemaError(where + "/terms", "expected an array");
  std::vector<std::pair<Exponent, std::int64_t>> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string w = where + "/terms/" + std::to_string(i);
    out.emplace_back(decode_exponent(at(terms[i], "exponents", w), d, w + "/exponents"),
                     decode_int(at(terms[i], "coefficient", w), w + "/coefficient"));
  }
  return LaurentPoly::from_terms(p, d, out);
}

inline RationalSubspace decode_subspace(const json& j, std::size_t ambient, const std::string& where) {
  const json& b = at(j, "basis", where);
  if (!b.is_array()) throw SchemaError(where + "/basis", "expected an array");
  std::vector<RatVector> vs;
  for (std::size_t i = 0; i < b.size(); ++i) {
    vs.push_back(decode_vector(b[i], where + "/basis/" + std::to_string(i)));
    if (vs.back().size() != ambient) throw SchemaError(where + "/basis/" + std::to_string(i), "wrong length");
  }
  return RationalSubspace::span(vs, ambient);
}

}  // namespace algdyn::io
