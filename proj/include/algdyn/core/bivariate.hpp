#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "algdyn/core/errors.hpp"
#include "algdyn/core/fp_poly.hpp"
#include "algdyn/core/laurent.hpp"

namespace algdyn {

/// Polynomial in a main variable y with coefficients in F_p[x]; index k of
/// `coeffs` holds the coefficient of y^k. Used for content and resultant
/// computations on two-variable Laurent polynomials.
struct RecursivePoly {
  Residue p = 2;
  std::vector<FpPoly> coeffs;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  const FpPoly& leading() const { return coeffs.back(); }

  void trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }
};

/// Views the monomial-free representative of f as a polynomial in u_{main+1}
/// over F_p[u_{other+1}].
inline RecursivePoly to_recursive(const LaurentPoly& f, int main_var) {
  if (f.variables() != 2) throw DomainError("recursive view needs two variables");
  const int other = 1 - main_var;
  RecursivePoly out{f.modulus(), {}};
  if (f.is_zero()) return out;
  const LaurentPoly c = f.canonical().poly;
  const std::size_t ydeg = static_cast<std::size_t>(c.degree_in(main_var));
  const std::size_t xdeg = static_cast<std::size_t>(c.degree_in(other));
  std::vector<std::vector<Residue>> dense(ydeg + 1, std::vector<Residue>(xdeg + 1, 0));
  for (const auto& [e, coeff] : c.terms())
    dense[static_cast<std::size_t>(e.v[static_cast<std::size_t>(main_var)])]
         [static_cast<std::size_t>(e.v[static_cast<std::size_t>(other)])] = coeff;
  for (auto& row : dense) out.coeffs.emplace_back(f.modulus(), std::move(row));
  out.trim();
  return out;
}

inline LaurentPoly from_recursive(const RecursivePoly& f, int main_var) {
  const int other = 1 - main_var;
  std::vector<std::pair<Exponent, std::int64_t>> terms;
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
    const auto& c = f.coeffs[k].coefficients();
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] == 0) continue;
      Exponent e;
      e.v[static_cast<std::size_t>(main_var)] = static_cast<std::int64_t>(k);
      e.v[static_cast<std::size_t>(other)] = static_cast<std::int64_t>(j);
      terms.emplace_back(e, static_cast<std::int64_t>(c[j]));
    }
  }
  return LaurentPoly::from_terms(f.p, 2, terms);
}

/// Monic gcd of the coefficients (zero for the zero polynomial).
inline FpPoly content(const RecursivePoly& f) {
  FpPoly g(f.p);
  for (const auto& c : f.coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd(g, c);
    if (g.is_unit()) break;
  }
  return g;
}

inline RecursivePoly primitive_part(const RecursivePoly& f) {
  if (f.is_zero()) return f;
  const FpPoly g = content(f);
  RecursivePoly out{f.p, {}};
  for (const auto& c : f.coeffs) out.coeffs.push_back(exact_quotient(c, g));
  out.trim();
  return out;
}

/// Content of a two-variable Laurent polynomial with respect to u_{main+1},
/// as a monic polynomial in the other variable.
inline FpPoly laurent_content(const LaurentPoly& f, int main_var) { return content(to_recursive(f, main_var)); }

/// Pseudo-remainder prem(a, b) in the main variable.
inline RecursivePoly pseudo_remainder(RecursivePoly a, const RecursivePoly& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
  const FpPoly& lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const FpPoly la = a.leading();
    const std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
    for (auto& c : a.coeffs) c = c * lb;
    for (std::size_t k = 0; k < b.coeffs.size(); ++k) a.coeffs[k + shift] = a.coeffs[k + shift] - la * b.coeffs[k];
    a.trim();
  }
  return a;
}

/// Res_y(f, g) as a polynomial in x, by fraction-free elimination on the
/// Sylvester matrix. Both inputs need positive degree in y.
inline FpPoly resultant(const RecursivePoly& f, const RecursivePoly& g) {
  if (f.p != g.p) throw ConfigurationError("modulus mismatch in resultant");
  if (f.degree() < 1 || g.degree() < 1) throw DomainError("resultant needs positive degree in the main variable");
  const std::size_t m = static_cast<std::size_t>(f.degree());
  const std::size_t n = static_cast<std::size_t>(g.degree());
  const std::size_t size = m + n;
  const Residue p = f.p;
  std::vector<std::vector<FpPoly>> s(size, std::vector<FpPoly>(size, FpPoly(p)));
  // Rows 0..n-1 carry shifted copies of f, rows n..n+m-1 shifted copies of g,
  // columns indexed by descending powers of y.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + (m - k)] = f.coeffs[k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + (n - k)] = g.coeffs[k];

  FpPoly prev = FpPoly::constant(p, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (s[k][k].is_zero()) {
      std::size_t sel = k + 1;
      while (sel < size && s[sel][k].is_zero()) ++sel;
      if (sel == size) return FpPoly(p);
      std::swap(s[sel], s[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        FpPoly num = s[i][j] * s[k][k] - s[i][k] * s[k][j];
        s[i][j] = num.is_zero() ? num : exact_quotient(num, prev);
      }
      s[i][k] = FpPoly(p);
    }
    prev = s[k][k];
  }
  FpPoly det = s[size - 1][size - 1];
  return negate ? det.scaled(mod_neg(1, p)) : det;
}

/// Why two bivariate polynomials were found to share (or not share) a factor.
enum class CommonFactorReason {
  None,            ///< no non-unit common divisor
  Content,         ///< common divisor free of the main variable
  Resultant,       ///< primitive parts have vanishing resultant
};

struct CommonFactorResult {
  bool shared = false;
  CommonFactorReason reason = CommonFactorReason::None;
  /// Variable index (0 = u1, 1 = u2) the witness lives in: the content
  /// variable for Content, the eliminated variable for Resultant.
  int witness_variable = -1;
  /// gcd of the contents when reason == Content.
  FpPoly content_gcd;
};

/// Decides whether f and g share a non-unit factor in F_p[u1^{±1}, u2^{±1}]:
/// content gcd in u1, then the resultant of the primitive parts in u2.
inline CommonFactorResult bivar_common_factor(const LaurentPoly& f, const LaurentPoly& g) {
  f.require_compatible(g);
  if (f.variables() != 2) throw DomainError("bivar_common_factor needs two variables");
  if (f.is_zero() || g.is_zero()) throw DomainError("bivar_common_factor needs nonzero input");
  CommonFactorResult out;
  out.content_gcd = FpPoly(f.modulus());
  if (f.is_unit() || g.is_unit()) return out;

  const RecursivePoly rf = to_recursive(f, 1);
  const RecursivePoly rg = to_recursive(g, 1);
  const FpPoly cg = gcd(content(rf), content(rg));
  if (!cg.is_unit()) {
    out.shared = true;
    out.reason = CommonFactorReason::Content;
    out.witness_variable = 0;
    out.content_gcd = cg;
    return out;
  }
  const RecursivePoly pf = primitive_part(rf);
  const RecursivePoly pg = primitive_part(rg);
  // A primitive polynomial free of u2 is a constant.
  if (pf.degree() < 1 || pg.degree() < 1) return out;
  if (resultant(pf, pg).is_zero()) {
    out.shared = true;
    out.reason = CommonFactorReason::Resultant;
    out.witness_variable = 1;
  }
  return out;
}

/// Unit-normalized gcd in F_p[u1^{±1}, u2^{±1}] by content splitting and a
/// primitive pseudo-remainder sequence in u2.
inline LaurentPoly bivar_gcd(const LaurentPoly& f, const LaurentPoly& g) {
  f.require_compatible(g);
  if (f.variables() != 2) throw DomainError("bivar_gcd needs two variables");
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (f.is_zero()) return unit_normalized(g);
  if (g.is_zero()) return unit_normalized(f);

  RecursivePoly a = to_recursive(f, 1);
  RecursivePoly b = to_recursive(g, 1);
  const FpPoly cont = gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    RecursivePoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  RecursivePoly prim = primitive_part(a);
  RecursivePoly scaled{a.p, {}};
  for (const auto& c : prim.coeffs) scaled.coeffs.push_back(c * cont);
  scaled.trim();
  return unit_normalized(from_recursive(scaled, 1));
}

}  // namespace algdyn
