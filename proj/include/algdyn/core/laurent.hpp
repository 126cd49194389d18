#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algdyn/core/errors.hpp"
#include "algdyn/core/fp_poly.hpp"

namespace algdyn {

/// Exponent vector of a Laurent monomial; unused trailing slots stay 0.
struct Exponent {
  std::array<std::int64_t, 2> v{0, 0};

  std::int64_t total() const { return v[0] + v[1]; }
  friend bool operator==(const Exponent& a, const Exponent& b) { return a.v == b.v; }
  friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }
  friend Exponent operator+(const Exponent& a, const Exponent& b) { return {{a.v[0] + b.v[0], a.v[1] + b.v[1]}}; }
  friend Exponent operator-(const Exponent& a, const Exponent& b) { return {{a.v[0] - b.v[0], a.v[1] - b.v[1]}}; }
  bool dominates(const Exponent& o) const { return v[0] >= o.v[0] && v[1] >= o.v[1]; }
};

/// Graded lexicographic order: total degree first, then u1, then u2.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.v < b.v;
  }
};

/// Sparse Laurent polynomial in d in {1, 2} variables over the prime field F_p.
/// Only nonzero coefficients are stored.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Residue, GrlexLess>;

  LaurentPoly() = default;
  LaurentPoly(Residue p, int d) : p_(p), d_(d) {
    if (d != 1 && d != 2) throw DomainError("only 1 or 2 variables are supported");
    if (p < 2 || p > kMaxModulus) throw DomainError("modulus out of range");
  }

  static LaurentPoly one(Residue p, int d) { return monomial(p, d, Exponent{}, 1); }
  static LaurentPoly monomial(Residue p, int d, Exponent e, Residue coeff = 1) {
    LaurentPoly out(p, d);
    out.add_term(e, coeff % p);
    return out;
  }
  /// Builds from (exponent, signed coefficient) pairs; duplicates accumulate.
  static LaurentPoly from_terms(Residue p, int d, const std::vector<std::pair<Exponent, std::int64_t>>& terms) {
    LaurentPoly out(p, d);
    for (const auto& [e, c] : terms) out.add_term(e, reduce_signed(c, p));
    return out;
  }
  /// u^{k n} - 1 for a direction n.
  static LaurentPoly binomial_minus_one(Residue p, int d, const Exponent& n, std::int64_t k) {
    LaurentPoly out(p, d);
    out.add_term(Exponent{{n.v[0] * k, n.v[1] * k}}, 1);
    out.add_term(Exponent{}, mod_neg(1, p));
    return out;
  }
  /// Embeds a univariate F_p polynomial in variable `var`.
  static LaurentPoly from_fp_poly(const FpPoly& f, int d, int var) {
    LaurentPoly out(f.modulus(), d);
    const auto& c = f.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      Exponent e;
      e.v[static_cast<std::size_t>(var)] = static_cast<std::int64_t>(k);
      out.add_term(e, c[k]);
    }
    return out;
  }

  Residue modulus() const { return p_; }
  int variables() const { return d_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Units of the Laurent ring are exactly the nonzero monomials.
  bool is_unit() const { return terms_.size() == 1; }

  std::pair<Exponent, Residue> leading() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return *terms_.rbegin();
  }

  Residue coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  bool uses_variable(int var) const {
    for (const auto& [e, c] : terms_)
      if (e.v[static_cast<std::size_t>(var)] != 0) return true;
    return false;
  }

  /// Componentwise minimum exponent; zero vector for the zero polynomial.
  Exponent min_exponent() const {
    if (terms_.empty()) return {};
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
      m.v[0] = std::min(m.v[0], e.v[0]);
      m.v[1] = std::min(m.v[1], e.v[1]);
    }
    return m;
  }

  std::int64_t degree_in(int var) const {
    std::int64_t out = -1;
    for (const auto& [e, c] : terms_) out = std::max(out, e.v[static_cast<std::size_t>(var)]);
    return out;
  }

  LaurentPoly shifted(const Exponent& by) const {
    LaurentPoly out(p_, d_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + by, c);
    return out;
  }

  /// Representative with nonnegative exponents and no monomial factor; *this
  /// equals u^{shift} times it.
  struct Canonical;
  Canonical canonical() const;

  /// Applies the ring automorphism u^a -> u^{M a} for M in GL_2(Z).
  LaurentPoly substitute(const std::array<std::array<std::int64_t, 2>, 2>& m) const {
    if (d_ != 2) throw DomainError("monomial substitution needs two variables");
    LaurentPoly out(p_, d_);
    for (const auto& [e, c] : terms_) {
      Exponent t{{m[0][0] * e.v[0] + m[0][1] * e.v[1], m[1][0] * e.v[0] + m[1][1] * e.v[1]}};
      out.add_term(t, c);
    }
    return out;
  }

  /// Exchanges u1 and u2.
  LaurentPoly swapped() const { return substitute({{{0, 1}, {1, 0}}}); }

  LaurentPoly scaled(Residue s) const {
    LaurentPoly out(p_, d_);
    for (const auto& [e, c] : terms_) out.add_term(e, mod_mul(c, s % p_, p_));
    return out;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.p_ == b.p_ && a.d_ == b.d_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    a.require_compatible(b);
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    a.require_compatible(b);
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, mod_neg(c, a.p_));
    return out;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.require_compatible(b);
    LaurentPoly out(a.p_, a.d_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, mod_mul(ca, cb, a.p_));
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (!out.empty()) out += " + ";
      std::string mono;
      for (int k = 0; k < d_; ++k) {
        const std::int64_t x = e.v[static_cast<std::size_t>(k)];
        if (x == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "u" + std::to_string(k + 1);
        if (x != 1) mono += "^" + std::to_string(x);
      }
      if (mono.empty()) {
        out += std::to_string(c);
      } else {
        if (c != 1) out += std::to_string(c) + "*";
        out += mono;
      }
    }
    return out;
  }

  void require_compatible(const LaurentPoly& other) const {
    if (p_ != other.p_) throw ConfigurationError("modulus mismatch between Laurent polynomials");
    if (d_ != other.d_) throw ConfigurationError("variable count mismatch between Laurent polynomials");
  }

 private:
  void add_term(const Exponent& e, Residue c) {
    if (d_ == 1 && e.v[1] != 0) throw DimensionError("second exponent used in a univariate polynomial");
    c %= p_;
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second = mod_add(it->second, c, p_);
    if (it->second == 0) terms_.erase(it);
  }

  Residue p_ = 2;
  int d_ = 1;
  TermMap terms_;
};

struct LaurentPoly::Canonical {
  LaurentPoly poly;
  Exponent shift;
};

inline LaurentPoly::Canonical LaurentPoly::canonical() const {
  const Exponent m = min_exponent();
  return {shifted(Exponent{} - m), m};
}

/// Exact quotient q with h = q g in the Laurent ring, or nullopt when g does
/// not divide h. Runs sparse division of the monomial-free representatives
/// under graded lex order; since the divisor is single, a nonzero remainder
/// step proves non-divisibility.
inline std::optional<LaurentPoly> laurent_divides(const LaurentPoly& g, const LaurentPoly& h) {
  g.require_compatible(h);
  if (g.is_zero()) throw DomainError("division by the zero Laurent polynomial");
  const Residue p = g.modulus();
  const int d = g.variables();
  if (h.is_zero()) return LaurentPoly(p, d);

  const auto [gc, gshift] = g.canonical();
  const auto [hc, hshift] = h.canonical();
  const auto [glead_e, glead_c] = gc.leading();
  const Residue inv = mod_inv(glead_c, p);

  LaurentPoly rem = hc;
  LaurentPoly quotient(p, d);
  while (!rem.is_zero()) {
    const auto [e, c] = rem.leading();
    if (!e.dominates(glead_e)) return std::nullopt;
    const LaurentPoly step = LaurentPoly::monomial(p, d, e - glead_e, mod_mul(c, inv, p));
    quotient = quotient + step;
    rem = rem - step * gc;
  }
  return quotient.shifted(hshift - gshift);
}

inline FpPoly to_fp_poly(const LaurentPoly& f, int var = 0) {
  if (f.is_zero()) return FpPoly(f.modulus());
  const auto canon = f.canonical();
  if (canon.poly.uses_variable(1 - var) && f.variables() == 2)
    throw DomainError("polynomial depends on more than one variable");
  std::vector<Residue> c(static_cast<std::size_t>(canon.poly.degree_in(var)) + 1, 0);
  for (const auto& [e, coeff] : canon.poly.terms()) c[static_cast<std::size_t>(e.v[static_cast<std::size_t>(var)])] = coeff;
  return FpPoly(f.modulus(), std::move(c));
}

/// Unit-normalized gcd of univariate Laurent polynomials: monic, nonzero
/// constant term.
inline LaurentPoly laurent_gcd_1d(const LaurentPoly& f, const LaurentPoly& g) {
  f.require_compatible(g);
  if (f.variables() != 1) throw DomainError("laurent_gcd_1d needs univariate input");
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero polynomials");
  return LaurentPoly::from_fp_poly(gcd(to_fp_poly(f), to_fp_poly(g)), 1, 0);
}

/// Monic canonical form: the unique associate with nonnegative exponents, no
/// monomial factor and leading coefficient 1.
inline LaurentPoly unit_normalized(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  LaurentPoly c = f.canonical().poly;
  return c.scaled(mod_inv(c.leading().second, c.modulus()));
}

}  // namespace algdyn
