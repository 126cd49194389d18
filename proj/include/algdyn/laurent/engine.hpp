#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "algdyn/action/action.hpp"
#include "algdyn/core/bivariate.hpp"
#include "algdyn/core/errors.hpp"
#include "algdyn/core/laurent.hpp"

namespace algdyn::laurent {

using action::LaurentCyclicAction;
using Substitution = std::array<std::array<std::int64_t, 2>, 2>;

enum class BoundedKind { NotErgodic, ErgodicUpTo, Ergodic };

inline const char* to_string(BoundedKind k) {
  switch (k) {
    case BoundedKind::NotErgodic: return "NotErgodic";
    case BoundedKind::ErgodicUpTo: return "ErgodicUpTo";
    case BoundedKind::Ergodic: return "Ergodic";
  }
  return "?";
}

/// A nonzero element m of S/(g) with finite orbit: for every listed
/// direction n_j, (u^{k n_j} - 1) m = q_j g.
struct FiniteOrbitWitness {
  std::int64_t k = 0;
  std::vector<Exponent> directions;
  LaurentPoly common_factor;
  LaurentPoly element;
  std::vector<LaurentPoly> quotients;
};

enum class ClosureKind {
  None,
  /// d = 1: S/(g) is finite, so some power of u fixes every element.
  FiniteModule,
  /// d = 2: after u^a -> u^{M a} the direction is (c, 0); the content of the
  /// transformed g in u2 decides every k at once.
  TransformedContent,
  /// d = 2 group: a common divisor of u1^k - 1 and u2^k - 1 is a unit.
  CoordinateSeparation,
};

inline const char* to_string(ClosureKind k) {
  switch (k) {
    case ClosureKind::None: return "None";
    case ClosureKind::FiniteModule: return "FiniteModule";
    case ClosureKind::TransformedContent: return "TransformedContent";
    case ClosureKind::CoordinateSeparation: return "CoordinateSeparation";
  }
  return "?";
}

struct ClosureArgument {
  ClosureKind kind = ClosureKind::None;
  Substitution substitution{{{1, 0}, {0, 1}}};
  /// Monic content of the transformed presentation; a unit iff ergodic.
  FpPoly transformed_content;
};

struct BoundedVerdict {
  BoundedKind kind = BoundedKind::ErgodicUpTo;
  /// Largest k examined by the scan (0 when the closure argument alone decided).
  std::int64_t k_searched = 0;
  std::optional<FiniteOrbitWitness> witness;
  ClosureArgument closure;

  bool exact() const { return kind != BoundedKind::ErgodicUpTo; }
  bool ergodic_or_bounded() const { return kind != BoundedKind::NotErgodic; }
};

struct LaurentOptions {
  /// Scan bound; defaults to p^{deg g} - 1 for d = 1 and p^{2 deg g} for d = 2.
  std::optional<std::int64_t> k_max;
  /// Ceiling applied to the d = 2 default.
  std::int64_t k_max_cap = 64;
  /// Use the closure arguments to turn bounded answers into exact ones.
  bool use_closure = true;
};

class ZeroDirection : public DomainError {
 public:
  ZeroDirection() : DomainError("direction n must be nonzero") {}
};

class ZeroElement : public DomainError {
 public:
  ZeroElement() : DomainError("element lies in (g) and is zero in the module") {}
};

class NotErgodicGroup : public std::runtime_error {
 public:
  explicit NotErgodicGroup(BoundedVerdict witness)
      : std::runtime_error("the Z^d-action is not ergodic"), witness_(std::move(witness)) {}
  const BoundedVerdict& witness() const { return witness_; }

 private:
  BoundedVerdict witness_;
};

class Exhausted : public std::runtime_error {
 public:
  explicit Exhausted(std::int64_t box)
      : std::runtime_error("no ergodic direction with |n|_inf <= " + std::to_string(box)), box_(box) {}
  std::int64_t box() const { return box_; }

 private:
  std::int64_t box_;
};

namespace detail {

inline std::int64_t saturating_pow(std::int64_t base, std::int64_t e, std::int64_t ceiling) {
  std::int64_t acc = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (acc > ceiling / base) return ceiling;
    acc *= base;
  }
  return std::min(acc, ceiling);
}

inline std::int64_t total_degree(const LaurentPoly& g) {
  std::int64_t out = 0;
  const LaurentPoly canon = g.canonical().poly;
  for (const auto& [e, c] : canon.terms()) out = std::max(out, e.total());
  return out;
}

/// Unimodular M with M n = (gcd(n1, n2), 0).
inline Substitution axis_substitution(const Exponent& n) {
  std::int64_t a = n.v[0], b = n.v[1];
  // extended Euclid: x a + y b = c
  std::int64_t old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_x, x) = std::make_pair(x, old_x - q * x);
    std::tie(old_y, y) = std::make_pair(y, old_y - q * y);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  const std::int64_t c = old_r;
  return {{{old_x, old_y}, {-b / c, a / c}}};
}

inline Substitution inverse_substitution(const Substitution& m) {
  const std::int64_t det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det != 1 && det != -1) throw InvariantViolation("substitution is not unimodular");
  return {{{m[1][1] * det, -m[0][1] * det}, {-m[1][0] * det, m[0][0] * det}}};
}

inline std::int64_t direction_gcd(const Exponent& n) { return std::gcd(std::llabs(n.v[0]), std::llabs(n.v[1])); }

/// Witness for a found k: m = g / h and the replayed quotients.
inline FiniteOrbitWitness make_witness(const LaurentPoly& g, std::int64_t k, std::vector<Exponent> directions,
                                       const LaurentPoly& h) {
  FiniteOrbitWitness w;
  w.k = k;
  w.common_factor = unit_normalized(h);
  auto m = laurent_divides(w.common_factor, g);
  if (!m) throw InvariantViolation("common factor does not divide the presentation");
  w.element = *m;
  for (const auto& n : directions) {
    const LaurentPoly lhs = LaurentPoly::binomial_minus_one(g.modulus(), g.variables(), n, k) * w.element;
    auto q = laurent_divides(g, lhs);
    if (!q) throw InvariantViolation("finite-orbit witness failed replay");
    w.quotients.push_back(*q);
  }
  w.directions = std::move(directions);
  if (laurent_divides(g, w.element)) throw InvariantViolation("finite-orbit witness is zero in the module");
  return w;
}

/// Least k in [1, limit] with gcd(f, u^{k step} - 1) non-unit, in F_p[u].
inline std::optional<std::pair<std::int64_t, FpPoly>> first_shared_root_order(const FpPoly& f, std::int64_t step,
                                                                           std::int64_t limit) {
  const Residue p = f.modulus();
  if (f.degree() < 1) return std::nullopt;
  const FpPoly u_step = divmod(FpPoly::monomial(p, 1), f).second;
  FpPoly base = FpPoly::constant(p, 1);
  for (std::int64_t i = 0; i < step; ++i) base = divmod(base * u_step, f).second;
  FpPoly x = FpPoly::constant(p, 1);
  for (std::int64_t k = 1; k <= limit; ++k) {
    x = divmod(x * base, f).second;
    const FpPoly h = gcd(f, x - FpPoly::constant(p, 1));
    if (!h.is_unit()) return std::make_pair(k, h);
  }
  return std::nullopt;
}

}  // namespace detail

inline std::int64_t default_k_max(const LaurentCyclicAction& a, const LaurentOptions& opt) {
  if (opt.k_max) {
    if (*opt.k_max < 1) throw DomainError("k_max must be at least 1");
    return *opt.k_max;
  }
  const auto p = static_cast<std::int64_t>(a.modulus());
  const std::int64_t deg = detail::total_degree(a.presentation());
  if (a.variables() == 1) return detail::saturating_pow(p, deg, std::int64_t{1} << 40) - 1;
  return detail::saturating_pow(p, 2 * deg, opt.k_max_cap);
}

/// Ergodicity of the dual of a -> u^n a on S/(g). Non-ergodic iff some k has
/// gcd(g, u^{kn} - 1) a non-unit; such k yields m = g / gcd with finite orbit.
inline BoundedVerdict alpha_is_ergodic(const LaurentCyclicAction& a, const Exponent& n, const LaurentOptions& opt = {}) {
  if (n.v[0] == 0 && n.v[1] == 0) throw ZeroDirection();
  if (a.variables() == 1 && n.v[1] != 0) throw DimensionError("direction has too many coordinates");
  const LaurentPoly& g = a.presentation();
  const Residue p = a.modulus();
  const std::int64_t k_max = default_k_max(a, opt);
  BoundedVerdict out;

  if (a.variables() == 1) {
    const FpPoly f = to_fp_poly(g);
    auto hit = detail::first_shared_root_order(f, std::llabs(n.v[0]), k_max);
    if (!hit) {
      // S/(g) has p^{deg g} elements, so the default bound always hits.
      if (!opt.k_max) throw InvariantViolation("finite module without a periodic element");
      out.kind = BoundedKind::ErgodicUpTo;
      out.k_searched = k_max;
      return out;
    }
    out.kind = BoundedKind::NotErgodic;
    out.k_searched = hit->first;
    out.closure.kind = ClosureKind::FiniteModule;
    out.witness = detail::make_witness(g, hit->first, {n}, LaurentPoly::from_fp_poly(hit->second, 1, 0));
    return out;
  }

  if (opt.use_closure) {
    const Substitution m = detail::axis_substitution(n);
    const LaurentPoly transformed = g.substitute(m);
    const FpPoly cont = laurent_content(transformed, 1);
    out.closure = {ClosureKind::TransformedContent, m, cont};
    if (cont.is_unit()) {
      out.kind = BoundedKind::Ergodic;
      return out;
    }
    // Every irreducible factor of the content other than u1 divides some
    // u1^N - 1, so this search terminates.
    auto hit = detail::first_shared_root_order(cont, detail::direction_gcd(n), std::int64_t{1} << 40);
    if (!hit) throw InvariantViolation("non-unit content without a root of unity");
    const LaurentPoly h = LaurentPoly::from_fp_poly(hit->second, 2, 0).substitute(detail::inverse_substitution(m));
    out.kind = BoundedKind::NotErgodic;
    out.k_searched = hit->first;
    out.witness = detail::make_witness(g, hit->first, {n}, h);
    return out;
  }

  for (std::int64_t k = 1; k <= k_max; ++k) {
    const LaurentPoly b = LaurentPoly::binomial_minus_one(p, 2, n, k);
    if (!bivar_common_factor(g, b).shared) continue;
    out.kind = BoundedKind::NotErgodic;
    out.k_searched = k;
    out.witness = detail::make_witness(g, k, {n}, bivar_gcd(g, b));
    return out;
  }
  out.kind = BoundedKind::ErgodicUpTo;
  out.k_searched = k_max;
  return out;
}

/// Ergodicity of the whole group {alpha_n}: non-ergodic iff for some k the
/// polynomials g, u1^k - 1, ..., u_d^k - 1 share a non-unit divisor.
inline BoundedVerdict group_is_ergodic(const LaurentCyclicAction& a, const LaurentOptions& opt = {}) {
  if (a.variables() == 1) return alpha_is_ergodic(a, Exponent{{1, 0}}, opt);

  const LaurentPoly& g = a.presentation();
  const Residue p = a.modulus();
  const std::int64_t k_max = default_k_max(a, opt);
  const FpPoly cont_u1 = laurent_content(g, 1);
  const Exponent e1{{1, 0}}, e2{{0, 1}};
  BoundedVerdict out;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    // Common divisors of g and u1^k - 1 live in F_p[u1]; they divide the content.
    if (cont_u1.degree() < 1) break;
    const FpPoly h1 = gcd(cont_u1, FpPoly::x_pow_minus_one(p, static_cast<std::size_t>(k)));
    if (h1.is_unit()) continue;
    const LaurentPoly h1_l = LaurentPoly::from_fp_poly(h1, 2, 0);
    const LaurentPoly b2 = LaurentPoly::binomial_minus_one(p, 2, e2, k);
    if (!bivar_common_factor(h1_l, b2).shared) continue;
    out.kind = BoundedKind::NotErgodic;
    out.k_searched = k;
    out.witness = detail::make_witness(g, k, {e1, e2}, bivar_gcd(h1_l, b2));
    return out;
  }
  out.k_searched = k_max;
  if (opt.use_closure) {
    out.kind = BoundedKind::Ergodic;
    out.closure.kind = ClosureKind::CoordinateSeparation;
  } else {
    out.kind = BoundedKind::ErgodicUpTo;
  }
  return out;
}

/// Nonzero directions with |n|_inf <= box in scan order: by |n|_inf, then
/// |n|_1, then lexicographically decreasing, so axis directions with
/// positive coordinates come first.
inline std::vector<Exponent> direction_scan_order(int d, std::int64_t box) {
  std::vector<Exponent> out;
  const std::int64_t hi = d == 2 ? box : 0;
  for (std::int64_t i = -box; i <= box; ++i)
    for (std::int64_t j = -hi; j <= hi; ++j)
      if (i != 0 || j != 0) out.push_back(Exponent{{i, j}});
  auto key = [](const Exponent& n) {
    const std::int64_t a = std::llabs(n.v[0]), b = std::llabs(n.v[1]);
    return std::make_tuple(std::max(a, b), a + b, -n.v[0], -n.v[1]);
  };
  std::sort(out.begin(), out.end(), [&](const Exponent& x, const Exponent& y) { return key(x) < key(y); });
  return out;
}

struct DirectionSearch {
  Exponent direction;
  BoundedVerdict verdict;
  BoundedVerdict group_verdict;
  std::size_t directions_examined = 0;
};

/// First direction n in scan order whose alpha_n is ergodic; bounded
/// verdicts qualify only when `allow_bounded`.
inline DirectionSearch find_ergodic_direction(const LaurentCyclicAction& a, std::int64_t search_box,
                                              const LaurentOptions& opt = {}, bool allow_bounded = true) {
  if (search_box < 1) throw DomainError("search box must be at least 1");
  BoundedVerdict group = group_is_ergodic(a, opt);
  if (group.kind == BoundedKind::NotErgodic) throw NotErgodicGroup(std::move(group));
  std::size_t examined = 0;
  for (const auto& n : direction_scan_order(a.variables(), search_box)) {
    ++examined;
    BoundedVerdict v = alpha_is_ergodic(a, n, opt);
    if (v.kind == BoundedKind::Ergodic || (allow_bounded && v.kind == BoundedKind::ErgodicUpTo))
      return {n, std::move(v), std::move(group), examined};
  }
  throw Exhausted(search_box);
}

struct ProbeResult {
  bool finite = false;
  /// Least k when finite, otherwise the cap.
  std::int64_t k = 0;
  std::optional<LaurentPoly> quotient;
};

/// Brute-force check of the orbit of m under alpha_n: least k <= cap with
/// (u^{kn} - 1) m in (g).
inline ProbeResult orbit_probe(const LaurentCyclicAction& a, const LaurentPoly& m, const Exponent& n, std::int64_t cap) {
  const LaurentPoly& g = a.presentation();
  g.require_compatible(m);
  if (n.v[0] == 0 && n.v[1] == 0) throw ZeroDirection();
  if (cap < 1) throw DomainError("probe cap must be at least 1");
  if (laurent_divides(g, m)) throw ZeroElement();
  for (std::int64_t k = 1; k <= cap; ++k) {
    auto q = laurent_divides(g, LaurentPoly::binomial_minus_one(g.modulus(), g.variables(), n, k) * m);
    if (q) return {true, k, std::move(q)};
  }
  return {false, cap, std::nullopt};
}

}  // namespace algdyn::laurent
