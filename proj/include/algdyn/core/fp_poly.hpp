#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "algdyn/core/errors.hpp"

namespace algdyn {

using Residue = std::uint64_t;

/// Largest supported prime modulus; keeps residue products inside 64 bits.
inline constexpr Residue kMaxModulus = (Residue{1} << 31) - 1;

inline bool is_prime(Residue n) {
  if (n < 2) return false;
  for (Residue q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

inline Residue mod_mul(Residue a, Residue b, Residue p) { return (a * b) % p; }
inline Residue mod_add(Residue a, Residue b, Residue p) { return (a + b) % p; }
inline Residue mod_sub(Residue a, Residue b, Residue p) { return (a + p - b) % p; }
inline Residue mod_neg(Residue a, Residue p) { return (p - a) % p; }

inline Residue mod_pow(Residue base, std::uint64_t e, Residue p) {
  Residue acc = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) acc = mod_mul(acc, base, p);
    base = mod_mul(base, base, p);
    e >>= 1;
  }
  return acc;
}

inline Residue mod_inv(Residue a, Residue p) {
  if (a % p == 0) throw DomainError("inverse of zero residue");
  return mod_pow(a, p - 2, p);
}

inline Residue reduce_signed(std::int64_t v, Residue p) {
  std::int64_t m = v % static_cast<std::int64_t>(p);
  if (m < 0) m += static_cast<std::int64_t>(p);
  return static_cast<Residue>(m);
}

/// Dense univariate polynomial over F_p, lowest degree first.
class FpPoly {
 public:
  FpPoly() = default;
  explicit FpPoly(Residue p) : p_(p) {}
  FpPoly(Residue p, std::vector<Residue> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= p_;
    trim();
  }

  static FpPoly constant(Residue p, Residue v) { return FpPoly(p, {v}); }
  static FpPoly monomial(Residue p, std::size_t degree, Residue coeff = 1) {
    std::vector<Residue> c(degree + 1, 0);
    c[degree] = coeff % p;
    return FpPoly(p, std::move(c));
  }
  /// x^n - 1
  static FpPoly x_pow_minus_one(Residue p, std::size_t n) {
    std::vector<Residue> c(n + 1, 0);
    c[0] = mod_neg(1, p);
    c[n] = mod_add(c[n], 1, p);
    return FpPoly(p, std::move(c));
  }

  Residue modulus() const { return p_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Nonzero constant.
  bool is_unit() const { return c_.size() == 1; }
  Residue leading() const { return c_.empty() ? 0 : c_.back(); }
  Residue coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  const std::vector<Residue>& coefficients() const { return c_; }

  /// Largest power of x dividing the polynomial.
  std::size_t low_degree() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    return k;
  }
  FpPoly shift_down(std::size_t k) const {
    if (k > c_.size()) return FpPoly(p_);
    return FpPoly(p_, std::vector<Residue>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }

  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  friend bool operator!=(const FpPoly& a, const FpPoly& b) { return !(a == b); }

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    const Residue p = a.common_modulus(b);
    std::vector<Residue> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] = a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] = mod_add(c[k], b.c_[k], p);
    return FpPoly(p, std::move(c));
  }
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b) {
    const Residue p = a.common_modulus(b);
    std::vector<Residue> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] = a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] = mod_sub(c[k], b.c_[k], p);
    return FpPoly(p, std::move(c));
  }
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    const Residue p = a.common_modulus(b);
    if (a.is_zero() || b.is_zero()) return FpPoly(p);
    std::vector<Residue> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = (c[i + j] + a.c_[i] * b.c_[j]) % p;
    }
    return FpPoly(p, std::move(c));
  }
  FpPoly scaled(Residue s) const {
    std::vector<Residue> c = c_;
    for (auto& v : c) v = mod_mul(v, s % p_, p_);
    return FpPoly(p_, std::move(c));
  }

  FpPoly monic() const {
    if (is_zero()) return *this;
    return scaled(mod_inv(leading(), p_));
  }

  Residue evaluate(Residue x) const {
    Residue acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = mod_add(mod_mul(acc, x, p_), *it, p_);
    return acc;
  }

  std::string to_string(const std::string& var = "u") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k] == 0) continue;
      if (!out.empty()) out += " + ";
      if (k == 0 || c_[k] != 1) out += std::to_string(c_[k]);
      if (k > 0) {
        if (c_[k] != 1) out += "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  Residue common_modulus(const FpPoly& other) const {
    if (p_ != other.p_) throw ConfigurationError("modulus mismatch between polynomials");
    return p_;
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  Residue p_ = 2;
  std::vector<Residue> c_;
};

inline std::pair<FpPoly, FpPoly> divmod(const FpPoly& num, const FpPoly& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  if (num.modulus() != den.modulus()) throw ConfigurationError("modulus mismatch between polynomials");
  const Residue p = num.modulus();
  if (num.degree() < den.degree()) return {FpPoly(p), num};
  std::vector<Residue> rem = num.coefficients();
  const auto& d = den.coefficients();
  const std::size_t dd = d.size() - 1;
  std::vector<Residue> quo(rem.size() - dd, 0);
  const Residue inv = mod_inv(d.back(), p);
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    const Residue f = mod_mul(rem[k], inv, p);
    quo[k - dd] = f;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] = mod_sub(rem[k - dd + j], mod_mul(f, d[j], p), p);
  }
  return {FpPoly(p, std::move(quo)), FpPoly(p, std::move(rem))};
}

inline FpPoly exact_quotient(const FpPoly& num, const FpPoly& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

inline bool divides(const FpPoly& den, const FpPoly& num) { return divmod(num, den).second.is_zero(); }

/// Monic gcd by Euclid.
inline FpPoly gcd(FpPoly a, FpPoly b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  while (!b.is_zero()) {
    FpPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace algdyn
