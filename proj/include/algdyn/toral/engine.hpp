#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "algdyn/action/action.hpp"
#include "algdyn/core/charpoly.hpp"
#include "algdyn/core/cyclotomic.hpp"
#include "algdyn/core/matrix.hpp"
#include "algdyn/core/subspace.hpp"
#include "algdyn/oracle/orbit.hpp"
#include "algdyn/toral/verdict.hpp"

namespace algdyn::toral {

/// Root-of-unity orders possible in dimension `dim` and their lcm.
struct AdmissibleOrders {
  std::vector<std::int64_t> orders;
  Integer exponent{1};
};

inline AdmissibleOrders admissible_orders(std::size_t dim) {
  if (dim == 0) return {};
  const auto r = static_cast<std::int64_t>(dim);
  return {root_of_unity_orders(r), m_star(r)};
}

struct CyclotomicSplit {
  std::vector<CyclotomicMultiplicity> cyclotomic;
  RatPolynomial residual;
};

/// Divides out every admissible cyclotomic factor, with multiplicity.
inline CyclotomicSplit split_cyclotomic(const RatPolynomial& poly, const std::vector<std::int64_t>& orders) {
  CyclotomicSplit out{{}, poly};
  for (std::int64_t d : orders) {
    const RatPolynomial phi = to_rational(cyclotomic(d));
    unsigned mult = 0;
    while (out.residual.degree() >= phi.degree()) {
      auto [q, r] = divmod(out.residual, phi);
      if (!r.is_zero()) break;
      out.residual = std::move(q);
      ++mult;
    }
    if (mult) out.cyclotomic.push_back({d, mult});
  }
  return out;
}

/// b^e - I
inline RatMatrix power_minus_identity(const RatMatrix& b, const Integer& e) {
  return power(b, e) - RatMatrix::identity(b.rows());
}

/// Least k >= 1 with b^k v = v, or nullopt if none up to `limit`.
inline std::optional<Integer> period_of(const RatMatrix& b, const RatVector& v, const Integer& limit) {
  RatVector cur = b * v;
  Integer k = 1;
  while (cur != v) {
    if (k >= limit) return std::nullopt;
    cur = b * cur;
    ++k;
  }
  return k;
}

/// Ergodicity of the automorphism whose dual matrix is `b`: ergodic iff no
/// eigenvalue is a root of unity. Both the cyclotomic-gcd route and the
/// det(b^{M*} - I) route are evaluated and must agree.
inline Verdict classify_ergodic(const RatMatrix& b) {
  if (!b.square()) throw DimensionError("classify_ergodic needs a square matrix");
  const AdmissibleOrders adm = admissible_orders(b.rows());
  const RatPolynomial cp = char_poly(b);
  std::vector<std::int64_t> hits;
  for (std::int64_t d : adm.orders)
    if (poly_gcd(cp, to_rational(cyclotomic(d))).degree() > 0) hits.push_back(d);

  const RatMatrix fixed_test = power_minus_identity(b, adm.exponent);
  const bool det_nonzero = b.rows() == 0 || determinant(fixed_test) != 0;
  if (hits.empty() != det_nonzero) throw InvariantViolation("cyclotomic-gcd and determinant routes disagree");

  if (hits.empty()) return {VerdictKind::Ergodic, NoRootOfUnityEigenvalue{cp, adm.orders, adm.exponent}};

  const RationalSubspace fixed = RationalSubspace::kernel(fixed_test);
  if (fixed.is_zero()) throw InvariantViolation("root-of-unity eigenvalue without a fixed character");
  const RatVector chi = to_rational(clear_denominators(fixed.basis_vector(0)));
  auto period = period_of(b, chi, adm.exponent);
  if (!period) throw InvariantViolation("fixed character of b^M* has no period dividing M*");
  return {VerdictKind::NotErgodic, WitnessCharacter{chi, *period, {}, hits}};
}

/// Distality of the automorphism with dual matrix `b`: quasi-unipotent iff
/// the characteristic polynomial is a product of admissible cyclotomics,
/// cross-checked by nilpotency of b^{M*} - I.
inline Verdict classify_distal(const RatMatrix& b) {
  if (!b.square()) throw DimensionError("classify_distal needs a square matrix");
  const AdmissibleOrders adm = admissible_orders(b.rows());
  const RatPolynomial cp = char_poly(b);
  CyclotomicSplit split = split_cyclotomic(cp, adm.orders);
  const bool by_factors = split.residual.degree() == 0;
  const bool by_nilpotency =
      b.rows() == 0 || power(power_minus_identity(b, adm.exponent), Integer(static_cast<long>(b.rows()))).is_zero();
  if (by_factors != by_nilpotency) throw InvariantViolation("cyclotomic factorization and nilpotency routes disagree");
  if (by_factors) return {VerdictKind::Distal, CyclotomicCharPoly{cp, std::move(split.cyclotomic)}};
  return {VerdictKind::NotDistal, NonCyclotomicFactor{cp, std::move(split.residual), std::move(split.cyclotomic)}};
}

inline Verdict is_ergodic_element(const action::MatrixAction& a, const std::vector<std::int64_t>& exponents) {
  return classify_ergodic(a.dual_element(exponents));
}

inline Verdict is_distal_element(const action::MatrixAction& a, const std::vector<std::int64_t>& exponents) {
  return classify_distal(a.dual_element(exponents));
}

/// Characters with finite orbit under the group generated by `duals`.
inline RationalSubspace finite_orbit_subspace(const std::vector<RatMatrix>& duals, std::size_t dim) {
  RationalSubspace acc = RationalSubspace::full(dim);
  if (dim == 0) return acc;
  const Integer e = m_star(static_cast<std::int64_t>(dim));
  for (const auto& d : duals) {
    acc = intersect(acc, RationalSubspace::kernel(power_minus_identity(d, e)));
    if (acc.is_zero()) break;
  }
  return acc;
}

inline RationalSubspace finite_orbit_subspace(const action::MatrixAction& a) {
  return finite_orbit_subspace(a.dual_generators(), a.dimension());
}

namespace detail {

inline Verdict group_verdict(const std::vector<RatMatrix>& duals, std::size_t dim) {
  const RationalSubspace fin = finite_orbit_subspace(duals, dim);
  const AdmissibleOrders adm = admissible_orders(dim);
  if (fin.is_zero()) {
    EmptyFiniteOrbitSubspace cert{adm.exponent, {}};
    for (const auto& d : duals)
      cert.kernel_dims.push_back(RationalSubspace::kernel(power_minus_identity(d, adm.exponent)).dim());
    return {VerdictKind::Ergodic, std::move(cert)};
  }
  const RatVector chi = to_rational(clear_denominators(fin.basis_vector(0)));
  std::vector<RatMatrix> gens;
  for (const auto& d : duals) {
    gens.push_back(d);
    gens.push_back(inverse(d));
  }
  oracle::OrbitOptions opts;
  opts.cap = 1000000;
  opts.max_bits = static_cast<std::size_t>(-1);
  opts.keep_members = true;
  auto orbit = oracle::enumerate_orbit(gens, chi, opts);
  if (!orbit.finite()) throw InvariantViolation("character in the finite-orbit subspace has no finite orbit");
  return {VerdictKind::NotErgodic,
          WitnessCharacter{chi, Integer(static_cast<unsigned long>(orbit.size)), std::move(orbit.members), {}}};
}

}  // namespace detail

/// Ergodic iff the finite-orbit subspace of the dual is zero; otherwise the
/// certificate carries a character and its explicitly enumerated orbit.
inline Verdict is_ergodic_group(const action::MatrixAction& a) {
  return detail::group_verdict(a.dual_generators(), a.dimension());
}

/// Commuting automorphisms generate a distal group iff each generator is distal.
inline Verdict is_distal_group(const action::MatrixAction& a) {
  GeneratorFactorizations all;
  for (std::size_t i = 0; i < a.generator_count(); ++i) {
    Verdict v = classify_distal(a.dual_generator(i));
    if (!v.distal()) {
      return {VerdictKind::NotDistal, FailingGenerator{i + 1, std::get<NonCyclotomicFactor>(std::move(v.certificate))}};
    }
    all.generators.push_back(std::get<CyclotomicCharPoly>(std::move(v.certificate)));
  }
  return {VerdictKind::Distal, std::move(all)};
}

/// W_inf: the annihilator of the largest closed invariant subgroup L on
/// which the group acts ergodically; the group is distal on K / L.
struct LargestErgodicReport {
  RationalSubspace annihilator;
  /// dim W after each fixpoint round, starting from 0.
  std::vector<std::size_t> round_dims;
  /// Group verdict on the quotient (dual of L); always Ergodic.
  Verdict quotient_verdict;
  /// Per-generator distality on W_inf (dual of K / L).
  std::vector<Verdict> distal_on_annihilator;
};

inline LargestErgodicReport largest_ergodic_subgroup(const action::MatrixAction& a) {
  const std::size_t r = a.dimension();
  const RationalSubspace full = RationalSubspace::full(r);
  RationalSubspace w = RationalSubspace::zero(r);
  LargestErgodicReport out;
  out.round_dims.push_back(0);
  for (;;) {
    QuotientFrame frame(full, w);
    if (frame.dim() == 0) break;
    std::vector<RatMatrix> induced;
    for (const auto& d : a.dual_generators()) induced.push_back(frame.induced(d));
    const RationalSubspace fin = finite_orbit_subspace(induced, frame.dim());
    if (fin.is_zero()) break;
    std::vector<RatVector> lifted = w.basis();
    for (const auto& y : fin.basis()) lifted.push_back(frame.lift(y));
    w = RationalSubspace::span(lifted, r);
    out.round_dims.push_back(w.dim());
  }
  QuotientFrame frame(full, w);
  std::vector<RatMatrix> induced;
  for (const auto& d : a.dual_generators()) induced.push_back(frame.induced(d));
  out.quotient_verdict = detail::group_verdict(induced, frame.dim());
  if (!out.quotient_verdict.ergodic()) throw InvariantViolation("quotient by W_inf still has finite orbits");
  for (const auto& d : a.dual_generators()) {
    if (!w.is_invariant_under(d)) throw InvariantViolation("W_inf is not invariant");
    out.distal_on_annihilator.push_back(classify_distal(w.restrict(d)));
    if (!out.distal_on_annihilator.back().distal()) throw InvariantViolation("generator not quasi-unipotent on W_inf");
  }
  out.annihilator = std::move(w);
  return out;
}

struct FiltrationStage {
  std::size_t generator = 0;  // 1-based
  /// Verdict of the dual generator on W_{i-1} / W_i; Ergodic by construction.
  Verdict verdict;
  std::size_t quotient_dim = 0;
};

/// Chain W_0 = Q^r >= W_1 >= ... >= W_n of dual annihilators of the
/// increasing subgroups K_0 = (e) <= K_1 <= ... <= K_n, where generator i is
/// ergodic on K_i / K_{i-1} and distal on K / K_i.
struct FiltrationReport {
  std::vector<RationalSubspace> chain;
  std::vector<FiltrationStage> stages;
  /// Per-generator distality on the residual W_n.
  std::vector<Verdict> residual_distal;
  bool group_ergodic = false;

  const RationalSubspace& residual() const { return chain.back(); }
};

inline FiltrationReport ergodic_distal_filtration(const action::MatrixAction& a) {
  const std::size_t r = a.dimension();
  const Integer e = m_star(static_cast<std::int64_t>(r));
  const Integer rr(static_cast<unsigned long>(r));
  FiltrationReport out;
  out.chain.push_back(RationalSubspace::full(r));
  for (std::size_t i = 0; i < a.generator_count(); ++i) {
    const RatMatrix& d = a.dual_generator(i);
    const RationalSubspace unipotent_part = RationalSubspace::kernel(power(power_minus_identity(d, e), rr));
    RationalSubspace next = intersect(out.chain.back(), unipotent_part);
    QuotientFrame frame(out.chain.back(), next);
    Verdict stage = classify_ergodic(frame.induced(d));
    if (!stage.ergodic()) throw InvariantViolation("filtration stage is not ergodic");
    out.stages.push_back({i + 1, std::move(stage), frame.dim()});
    out.chain.push_back(std::move(next));
  }
  const RationalSubspace& res = out.chain.back();
  for (const auto& d : a.dual_generators()) {
    out.residual_distal.push_back(classify_distal(res.restrict(d)));
    if (!out.residual_distal.back().distal()) throw InvariantViolation("generator not quasi-unipotent on the residual");
  }
  out.group_ergodic = res.is_zero();
  return out;
}

/// Raised when an operation needs an ergodic group and gets a non-ergodic one.
class NotErgodicGroup : public std::runtime_error {
 public:
  explicit NotErgodicGroup(Verdict witness)
      : std::runtime_error("the group is not ergodic"), witness_(std::move(witness)) {}
  const Verdict& witness() const { return witness_; }

 private:
  Verdict witness_;
};

class SearchExhausted : public std::runtime_error {
 public:
  explicit SearchExhausted(std::int64_t bound)
      : std::runtime_error("no ergodic element with exponent sum <= " + std::to_string(bound)), bound_(bound) {}
  std::int64_t bound() const { return bound_; }

 private:
  std::int64_t bound_;
};

struct ErgodicElement {
  std::vector<std::int64_t> exponents;
  RatMatrix element;
  RatMatrix dual_element;
  Verdict verdict;
  std::size_t candidates_examined = 0;
};

/// Calls `visit` on every all-positive exponent vector of length n, by
/// increasing sum then lexicographically, until it returns true.
inline bool for_each_positive_exponent(std::size_t n, std::int64_t max_sum,
                                       const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> cur(n);
  std::function<bool(std::size_t, std::int64_t)> rec = [&](std::size_t pos, std::int64_t remaining) {
    if (pos + 1 == n) {
      cur[pos] = remaining;
      return visit(cur);
    }
    const auto slots_left = static_cast<std::int64_t>(n - pos - 1);
    for (std::int64_t v = 1; v <= remaining - slots_left; ++v) {
      cur[pos] = v;
      if (rec(pos + 1, remaining - v)) return true;
    }
    return false;
  };
  for (std::int64_t s = static_cast<std::int64_t>(n); s <= max_sum; ++s)
    if (rec(0, s)) return true;
  return false;
}

/// First all-positive exponent vector whose group element is ergodic. The
/// group must be ergodic.
inline ErgodicElement find_ergodic_exponents(const action::MatrixAction& a, std::int64_t max_exponent_sum = 64) {
  Verdict group = is_ergodic_group(a);
  if (!group.ergodic()) throw NotErgodicGroup(std::move(group));
  std::optional<ErgodicElement> found;
  std::size_t examined = 0;
  for_each_positive_exponent(a.generator_count(), max_exponent_sum, [&](const std::vector<std::int64_t>& e) {
    ++examined;
    RatMatrix dual = a.dual_element(e);
    Verdict v = classify_ergodic(dual);
    if (!v.ergodic()) return false;
    found = ErgodicElement{e, a.element(e), std::move(dual), std::move(v), examined};
    return true;
  });
  if (!found) throw SearchExhausted(max_exponent_sum);
  return std::move(*found);
}

}  // namespace algdyn::toral
