#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "algdyn/action/action.hpp"

namespace algdyn::io {

using nlohmann::json;

/// Input document that does not match the schema; `where` is a JSON pointer.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

namespace detail {

inline Rational parse_scalar(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(Integer(v.get<std::int64_t>()));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const DomainError& e) {
      throw SchemaError(where, e.what());
    }
  }
  throw SchemaError(where, "expected an integer or a rational string such as \"3/4\"");
}

inline std::int64_t parse_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw SchemaError(where, "expected an integer");
  return v.get<std::int64_t>();
}

inline const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(where, std::string("missing field '") + key + "'");
  return *it;
}

inline RatMatrix parse_matrix(const json& m, const std::string& where) {
  if (!m.is_array() || m.empty()) throw SchemaError(where, "expected a non-empty array of rows");
  const std::size_t rows = m.size();
  if (!m[0].is_array()) throw SchemaError(where + "/0", "expected an array of entries");
  const std::size_t cols = m[0].size();
  RatMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string row_where = where + "/" + std::to_string(i);
    if (!m[i].is_array() || m[i].size() != cols) throw SchemaError(row_where, "rows must all have the same length");
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = parse_scalar(m[i][j], row_where + "/" + std::to_string(j));
  }
  return out;
}

}  // namespace detail

/// Reads an action document:
///   {"type": "toral" | "solenoid", "r": n, "generators": [matrix, ...]}
///   {"type": "laurent", "p": prime, "d": 1 | 2,
///    "g": [{"exponents": [..], "coefficient": c}, ...]}
inline action::RawAction parse_document(const json& doc) {
  if (!doc.is_object()) throw SchemaError("", "document must be an object");
  const json& type = detail::require(doc, "type", "");
  if (!type.is_string()) throw SchemaError("/type", "expected a string");
  const std::string t = type.get<std::string>();

  if (t == "toral" || t == "solenoid") {
    action::RawMatrixAction raw;
    raw.kind = t == "toral" ? action::MatrixKind::Toral : action::MatrixKind::Solenoid;
    const std::int64_t r = detail::parse_int(detail::require(doc, "r", ""), "/r");
    if (r < 0) throw SchemaError("/r", "dimension must be nonnegative");
    raw.r = static_cast<std::size_t>(r);
    const json& gens = detail::require(doc, "generators", "");
    if (!gens.is_array()) throw SchemaError("/generators", "expected an array of matrices");
    for (std::size_t i = 0; i < gens.size(); ++i)
      raw.generators.push_back(detail::parse_matrix(gens[i], "/generators/" + std::to_string(i)));
    return raw;
  }
  if (t == "laurent") {
    action::RawLaurentAction raw;
    raw.p = detail::parse_int(detail::require(doc, "p", ""), "/p");
    const std::int64_t d = detail::parse_int(detail::require(doc, "d", ""), "/d");
    if (d != 1 && d != 2) throw SchemaError("/d", "number of variables must be 1 or 2");
    raw.d = static_cast<int>(d);
    const json& g = detail::require(doc, "g", "");
    if (!g.is_array()) throw SchemaError("/g", "expected an array of terms");
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::string where = "/g/" + std::to_string(i);
      if (!g[i].is_object()) throw SchemaError(where, "expected a term object");
      const json& ex = detail::require(g[i], "exponents", where);
      if (!ex.is_array() || ex.size() != static_cast<std::size_t>(d))
        throw SchemaError(where + "/exponents", "expected " + std::to_string(d) + " exponents");
      Exponent e;
      for (std::size_t k = 0; k < ex.size(); ++k)
        e.v[k] = detail::parse_int(ex[k], where + "/exponents/" + std::to_string(k));
      const std::int64_t c = detail::parse_int(detail::require(g[i], "coefficient", where), where + "/coefficient");
      raw.terms.emplace_back(e, c);
    }
    return raw;
  }
  throw SchemaError("/type", "unknown action type '" + t + "'");
}

}  // namespace algdyn::io
