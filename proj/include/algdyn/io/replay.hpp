#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "algdyn/action/action.hpp"
#include "algdyn/core/bivariate.hpp"
#include "algdyn/core/charpoly.hpp"
#include "algdyn/core/cyclotomic.hpp"
#include "algdyn/io/codec.hpp"
#include "algdyn/io/document.hpp"
#include "algdyn/oracle/demo_e2.hpp"

// Re-checks every certificate embedded in a report using only exact
// arithmetic: characteristic polynomials, cyclotomic division, matrix powers
// and sparse Laurent division. No engine is re-run.
namespace algdyn::io {

struct ReplayResult {
  std::size_t certificates = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

namespace replay {

class Checker {
 public:
  explicit Checker(ReplayResult& out) : out_(out) {}

  void expect(bool cond, const std::string& where, const std::string& what) {
    if (!cond) out_.failures.push_back(where + ": " + what);
  }
  void count() { ++out_.certificates; }

  // Runs `body`, turning malformed-report exceptions into failures.
  template <class F>
  void guarded(const std::string& where, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      out_.failures.push_back(where + ": " + e.what());
    }
  }

 private:
  ReplayResult& out_;
};

inline std::vector<toral::CyclotomicMultiplicity> decode_factors(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where, "expected an array");
  std::vector<toral::CyclotomicMultiplicity> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "/" + std::to_string(i);
    out.push_back({decode_int(at(j[i], "order", w), w + "/order"),
                   static_cast<unsigned>(decode_int(at(j[i], "multiplicity", w), w + "/multiplicity"))});
  }
  return out;
}

inline RatPolynomial cyclotomic_product(const std::vector<toral::CyclotomicMultiplicity>& fs) {
  RatPolynomial acc = RatPolynomial::constant(Rational(1));
  for (const auto& f : fs) acc = acc * to_rational(cyclotomic(f.order)).pow(f.multiplicity);
  return acc;
}

inline std::vector<std::int64_t> decode_orders(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where, "expected an array");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(decode_int(j[i], where + "/" + std::to_string(i)));
  return out;
}

// Dimension 0 (a trivial quotient) has no admissible orders and exponent 1.
inline std::vector<std::int64_t> orders_for(std::size_t dim) {
  return dim == 0 ? std::vector<std::int64_t>{} : root_of_unity_orders(static_cast<std::int64_t>(dim));
}
inline Integer exponent_for(std::size_t dim) { return dim == 0 ? Integer(1) : m_star(static_cast<std::int64_t>(dim)); }

inline bool admissible(std::int64_t d, std::size_t dim) { return d >= 1 && euler_phi(d) <= static_cast<std::int64_t>(dim); }

inline void check_cyclotomic_char_poly(Checker& ck, const json& c, const RatMatrix& b, const std::string& w) {
  const RatPolynomial cp = decode_poly(at(c, "char_poly", w), w + "/char_poly");
  const auto fs = decode_factors(at(c, "factors", w), w + "/factors");
  ck.expect(cp == char_poly(b), w, "char_poly does not match the matrix");
  for (const auto& f : fs) ck.expect(admissible(f.order, b.rows()), w, "factor order not admissible");
  ck.expect(cyclotomic_product(fs) == cp, w, "cyclotomic factors do not multiply to char_poly");
}

inline void check_non_cyclotomic(Checker& ck, const json& c, const RatMatrix& b, const std::string& w) {
  const RatPolynomial cp = decode_poly(at(c, "char_poly", w), w + "/char_poly");
  const RatPolynomial residual = decode_poly(at(c, "residual", w), w + "/residual");
  const auto fs = decode_factors(at(c, "cyclotomic_part", w), w + "/cyclotomic_part");
  ck.expect(cp == char_poly(b), w, "char_poly does not match the matrix");
  ck.expect(residual.degree() >= 1, w, "residual is constant");
  ck.expect(residual * cyclotomic_product(fs) == cp, w, "residual times cyclotomic part is not char_poly");
  for (std::int64_t d : orders_for(b.rows()))
    ck.expect(poly_gcd(residual, to_rational(cyclotomic(d))).degree() == 0, w,
              "residual shares a factor with Phi_" + std::to_string(d));
}

/// Verdict of a single automorphism with dual matrix `b`.
inline void element_verdict(Checker& ck, const json& v, const RatMatrix& b, const std::string& where) {
  ck.guarded(where, [&] {
    ck.count();
    const std::string kind = at(v, "verdict", where).get<std::string>();
    const json& c = at(v, "certificate", where);
    const std::string w = where + "/certificate";
    const std::string type = at(c, "type", w).get<std::string>();
    const std::size_t dim = b.rows();
    if (type == "NoRootOfUnityEigenvalue") {
      ck.expect(kind == "Ergodic", where, "certificate does not support " + kind);
      const RatPolynomial cp = decode_poly(at(c, "char_poly", w), w + "/char_poly");
      const auto orders = decode_orders(at(c, "orders_checked", w), w + "/orders_checked");
      const Integer e = decode_integer(at(c, "exponent", w), w + "/exponent");
      ck.expect(cp == char_poly(b), w, "char_poly does not match the matrix");
      ck.expect(orders == orders_for(dim), w, "orders_checked is not the admissible list");
      ck.expect(e == exponent_for(dim), w, "exponent is not M*");
      for (std::int64_t d : orders)
        ck.expect(poly_gcd(cp, to_rational(cyclotomic(d))).degree() == 0, w, "char_poly shares a factor with Phi_" + std::to_string(d));
      ck.expect(determinant(power(b, e) - RatMatrix::identity(dim)) != 0, w, "det(B^M* - I) vanishes");
    } else if (type == "WitnessCharacter") {
      ck.expect(kind == "NotErgodic", where, "certificate does not support " + kind);
      const RatVector chi = decode_vector(at(c, "character", w), w + "/character");
      const Integer period = decode_integer(at(c, "period", w), w + "/period");
      ck.expect(chi.size() == dim && !is_zero_vector(chi), w, "character must be a nonzero vector of the right length");
      ck.expect(period >= 1, w, "period must be positive");
      if (chi.size() == dim && period >= 1) ck.expect(power(b, period) * chi == chi, w, "B^period does not fix the character");
    } else if (type == "CyclotomicCharPoly") {
      ck.expect(kind == "Distal", where, "certificate does not support " + kind);
      check_cyclotomic_char_poly(ck, c, b, w);
    } else if (type == "NonCyclotomicFactor") {
      ck.expect(kind == "NotDistal", where, "certificate does not support " + kind);
      check_non_cyclotomic(ck, c, b, w);
    } else {
      ck.expect(false, w, "unexpected certificate type " + type);
    }
  });
}

inline std::string key_of(const RatVector& v) {
  std::string s;
  for (const auto& x : v) s += x.get_str() + ",";
  return s;
}

/// Verdict of the group generated by `duals` acting on Q^dim.
inline void group_verdict(Checker& ck, const json& v, const std::vector<RatMatrix>& duals, std::size_t dim,
                          const std::string& where) {
  ck.guarded(where, [&] {
    ck.count();
    const std::string kind = at(v, "verdict", where).get<std::string>();
    const json& c = at(v, "certificate", where);
    const std::string w = where + "/certificate";
    const std::string type = at(c, "type", w).get<std::string>();
    if (type == "EmptyFiniteOrbitSubspace") {
      ck.expect(kind == "Ergodic", where, "certificate does not support " + kind);
      const Integer e = decode_integer(at(c, "exponent", w), w + "/exponent");
      ck.expect(e == exponent_for(dim), w, "exponent is not M*");
      const auto dims = decode_orders(at(c, "kernel_dims", w), w + "/kernel_dims");
      ck.expect(dims.size() == duals.size(), w, "one kernel dimension per generator expected");
      RationalSubspace acc = RationalSubspace::full(dim);
      for (std::size_t i = 0; i < duals.size(); ++i) {
        const RationalSubspace k = RationalSubspace::kernel(power(duals[i], e) - RatMatrix::identity(dim));
        if (i < dims.size()) ck.expect(static_cast<std::int64_t>(k.dim()) == dims[i], w, "kernel dimension mismatch");
        acc = intersect(acc, k);
      }
      ck.expect(acc.is_zero(), w, "common fixed space of the generator powers is not zero");
    } else if (type == "WitnessCharacter") {
      ck.expect(kind == "NotErgodic", where, "certificate does not support " + kind);
      const RatVector chi = decode_vector(at(c, "character", w), w + "/character");
      const Integer period = decode_integer(at(c, "period", w), w + "/period");
      const json& orbit_j = at(c, "orbit", w);
      std::set<std::string> orbit;
      if (!orbit_j.is_array()) throw SchemaError(w + "/orbit", "expected an array");
      std::vector<RatVector> members;
      for (std::size_t i = 0; i < orbit_j.size(); ++i) {
        members.push_back(decode_vector(orbit_j[i], w + "/orbit/" + std::to_string(i)));
        orbit.insert(key_of(members.back()));
      }
      ck.expect(chi.size() == dim && !is_zero_vector(chi), w, "character must be a nonzero vector of the right length");
      ck.expect(orbit.count(key_of(chi)) == 1, w, "character is not in its orbit");
      ck.expect(Integer(static_cast<unsigned long>(orbit.size())) == period && orbit.size() == members.size(), w,
                "orbit size does not match the period");
      for (const auto& m : members) {
        if (m.size() != dim) {
          ck.expect(false, w, "orbit member of the wrong length");
          break;
        }
        for (const auto& d : duals) ck.expect(orbit.count(key_of(d * m)) == 1, w, "orbit is not closed under a generator");
      }
    } else if (type == "GeneratorFactorizations") {
      ck.expect(kind == "Distal", where, "certificate does not support " + kind);
      const json& gens = at(c, "generators", w);
      ck.expect(gens.is_array() && gens.size() == duals.size(), w, "one factorization per generator expected");
      for (std::size_t i = 0; i < duals.size() && i < gens.size(); ++i)
        check_cyclotomic_char_poly(ck, gens[i], duals[i], w + "/generators/" + std::to_string(i));
    } else if (type == "FailingGenerator") {
      ck.expect(kind == "NotDistal", where, "certificate does not support " + kind);
      const std::int64_t idx = decode_int(at(c, "generator", w), w + "/generator");
      ck.expect(idx >= 1 && static_cast<std::size_t>(idx) <= duals.size(), w, "generator index out of range");
      if (idx >= 1 && static_cast<std::size_t>(idx) <= duals.size())
        check_non_cyclotomic(ck, at(c, "factor", w), duals[static_cast<std::size_t>(idx - 1)], w + "/factor");
    } else {
      ck.expect(false, w, "unexpected certificate type " + type);
    }
  });
}

/// Bounded verdict about the directions `subject` on S/(g).
inline void bounded_verdict(Checker& ck, const json& v, const LaurentPoly& g, const std::vector<Exponent>& subject,
                            bool whole_group, const std::string& where) {
  ck.guarded(where, [&] {
    const std::string kind = at(v, "verdict", where).get<std::string>();
    const bool exact = at(v, "exact", where).get<bool>();
    ck.expect(exact == (kind != "ErgodicUpTo"), where, "exact flag inconsistent with the verdict");
    const int d = g.variables();
    const json& wj = at(v, "witness", where);
    if (kind == "NotErgodic") {
      ck.count();
      const std::string w = where + "/witness";
      if (wj.is_null()) {
        ck.expect(false, where, "NotErgodic without a witness");
        return;
      }
      const std::int64_t k = decode_int(at(wj, "k", w), w + "/k");
      const LaurentPoly m = decode_laurent(at(wj, "element", w), w + "/element");
      const json& dirs = at(wj, "directions", w);
      const json& quots = at(wj, "quotients", w);
      ck.expect(k >= 1, w, "k must be positive");
      ck.expect(dirs.is_array() && quots.is_array() && dirs.size() == quots.size() && dirs.size() == subject.size(), w,
                "one quotient per direction expected");
      ck.expect(!m.is_zero() && !laurent_divides(g, m), w, "element is zero in the module");
      for (std::size_t i = 0; i < subject.size() && i < dirs.size() && i < quots.size(); ++i) {
        const Exponent n = decode_exponent(dirs[i], d, w + "/directions/" + std::to_string(i));
        ck.expect(n == subject[i], w, "witness direction does not match");
        const LaurentPoly q = decode_laurent(quots[i], w + "/quotients/" + std::to_string(i));
        ck.expect(LaurentPoly::binomial_minus_one(g.modulus(), d, n, k) * m == q * g, w,
                  "(u^{kn} - 1) m != q g for direction " + std::to_string(i));
      }
      return;
    }
    ck.expect(wj.is_null(), where, "witness attached to an ergodic verdict");
    if (kind == "ErgodicUpTo") return;  // bounded: nothing to replay
    ck.count();
    const json& cl = at(v, "closure", where);
    const std::string ck_kind = at(cl, "kind", where + "/closure").get<std::string>();
    const std::string w = where + "/closure";
    if (ck_kind == "TransformedContent") {
      ck.expect(!whole_group && subject.size() == 1 && d == 2, w, "closure applies to a single d = 2 direction");
      const json& sj = at(cl, "substitution", w);
      laurent::Substitution m{};
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m[i][j] = decode_int(sj.at(i).at(j), w + "/substitution");
      const std::int64_t det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
      ck.expect(det == 1 || det == -1, w, "substitution is not unimodular");
      const Exponent& n = subject.front();
      ck.expect(m[1][0] * n.v[0] + m[1][1] * n.v[1] == 0 && m[0][0] * n.v[0] + m[0][1] * n.v[1] > 0, w,
                "substitution does not move the direction onto the first axis");
      const FpPoly cont = laurent_content(g.substitute(m), 1);
      ck.expect(cont == decode_fp_poly(at(cl, "transformed_content", w), w + "/transformed_content"), w,
                "transformed content mismatch");
      ck.expect(cont.is_unit(), w, "transformed content is not a unit");
    } else if (ck_kind == "CoordinateSeparation") {
      ck.expect(whole_group && d == 2, w, "closure applies to the whole d = 2 group");
    } else {
      ck.expect(false, w, "Ergodic verdict without an exact closure argument");
    }
  });
}

inline std::vector<RatMatrix> induced_all(const QuotientFrame& f, const std::vector<RatMatrix>& duals) {
  std::vector<RatMatrix> out;
  for (const auto& d : duals) out.push_back(f.induced(d));
  return out;
}

inline void matrix_report(Checker& ck, const json& rep, const action::MatrixAction& a, const std::string& command) {
  const auto& duals = a.dual_generators();
  const std::size_t r = a.dimension();
  if (command == "analyze") {
    const json& gens = at(rep, "generators", "");
    ck.expect(gens.is_array() && gens.size() == duals.size(), "/generators", "one entry per generator expected");
    for (std::size_t i = 0; i < duals.size() && i < gens.size(); ++i) {
      const std::string w = "/generators/" + std::to_string(i);
      element_verdict(ck, at(gens[i], "ergodic", w), duals[i], w + "/ergodic");
      element_verdict(ck, at(gens[i], "distal", w), duals[i], w + "/distal");
      ck.expect(at(gens[i], "mixing_of_all_orders", w).get<bool>() == (gens[i]["ergodic"]["verdict"] == "Ergodic"), w,
                "mixing flag must follow the ergodic verdict");
    }
    const json& grp = at(rep, "group", "");
    group_verdict(ck, at(grp, "ergodic", "/group"), duals, r, "/group/ergodic");
    group_verdict(ck, at(grp, "distal", "/group"), duals, r, "/group/distal");
    const std::string w = "/largest_ergodic_subgroup";
    const json& les = at(rep, "largest_ergodic_subgroup", "");
    const RationalSubspace ann = decode_subspace(at(les, "annihilator", w), r, w + "/annihilator");
    for (const auto& d : duals) ck.expect(ann.is_invariant_under(d), w, "annihilator is not invariant");
    const QuotientFrame frame(RationalSubspace::full(r), ann);
    group_verdict(ck, at(les, "quotient", w), induced_all(frame, duals), frame.dim(), w + "/quotient");
    ck.expect(les["quotient"]["verdict"] == "Ergodic", w, "quotient must be ergodic");
    const json& dist = at(les, "distal_on_annihilator", w);
    ck.expect(dist.is_array() && dist.size() == duals.size(), w, "one distality verdict per generator expected");
    for (std::size_t i = 0; i < duals.size() && i < dist.size(); ++i) {
      if (!ann.is_invariant_under(duals[i])) continue;
      element_verdict(ck, dist[i], ann.restrict(duals[i]), w + "/distal_on_annihilator/" + std::to_string(i));
      ck.expect(dist[i]["verdict"] == "Distal", w, "generator must be distal on the annihilator");
    }
  } else if (command == "find-ergodic") {
    group_verdict(ck, at(rep, "group", ""), duals, r, "/group");
    ck.expect(rep["group"]["verdict"] == "Ergodic", "/group", "search needs an ergodic group");
    const json& ex = at(rep, "exponents", "");
    std::vector<std::int64_t> exps;
    for (std::size_t i = 0; i < ex.size(); ++i) exps.push_back(decode_int(ex[i], "/exponents/" + std::to_string(i)));
    ck.expect(exps.size() == duals.size(), "/exponents", "one exponent per generator expected");
    for (auto e : exps) ck.expect(e > 0, "/exponents", "exponents must be positive");
    if (exps.size() != duals.size()) return;
    ck.expect(decode_matrix(at(rep, "element", ""), "/element") == a.element(exps), "/element", "element does not match the exponents");
    const RatMatrix dual = decode_matrix(at(rep, "dual_element", ""), "/dual_element");
    ck.expect(dual == a.dual_element(exps), "/dual_element", "dual element does not match the exponents");
    element_verdict(ck, at(rep, "verdict", ""), dual, "/verdict");
    ck.expect(rep["verdict"]["verdict"] == "Ergodic", "/verdict", "found element must be ergodic");
  } else if (command == "filtration") {
    const json& chain_j = at(rep, "chain", "");
    std::vector<RationalSubspace> chain;
    for (std::size_t i = 0; i < chain_j.size(); ++i)
      chain.push_back(decode_subspace(chain_j[i], r, "/chain/" + std::to_string(i)));
    ck.expect(chain.size() == duals.size() + 1, "/chain", "chain must have one subspace per generator plus one");
    if (chain.size() != duals.size() + 1) return;
    ck.expect(chain.front().is_full(), "/chain/0", "chain must start with the whole space");
    const json& dims = at(rep, "dimensions", "");
    ck.expect(dims.is_array() && dims.size() == chain.size(), "/dimensions", "one dimension per chain entry expected");
    for (std::size_t i = 0; i < chain.size() && i < dims.size(); ++i)
      ck.expect(dims[i].is_number_unsigned() && dims[i].get<std::size_t>() == chain[i].dim(), "/dimensions/" + std::to_string(i),
                "dimension does not match the chain");
    for (std::size_t i = 0; i < chain.size(); ++i)
      for (const auto& d : duals) ck.expect(chain[i].is_invariant_under(d), "/chain/" + std::to_string(i), "subspace is not invariant");
    const json& stages = at(rep, "stages", "");
    ck.expect(stages.is_array() && stages.size() == duals.size(), "/stages", "one stage per generator expected");
    for (std::size_t i = 0; i < duals.size() && i < stages.size(); ++i) {
      const std::string w = "/stages/" + std::to_string(i);
      if (!chain[i].contains(chain[i + 1])) {
        ck.expect(false, w, "chain is not descending");
        continue;
      }
      const QuotientFrame frame(chain[i], chain[i + 1]);
      ck.expect(at(stages[i], "quotient_dim", w) == frame.dim(), w, "quotient dimension mismatch");
      element_verdict(ck, at(stages[i], "verdict", w), frame.induced(duals[i]), w + "/verdict");
      ck.expect(stages[i]["verdict"]["verdict"] == "Ergodic", w, "stage must be ergodic");
    }
    const RationalSubspace& res = chain.back();
    const json& rd = at(rep, "residual_distal", "");
    for (std::size_t i = 0; i < duals.size() && i < rd.size(); ++i) {
      element_verdict(ck, rd[i], res.restrict(duals[i]), "/residual_distal/" + std::to_string(i));
      ck.expect(rd[i]["verdict"] == "Distal", "/residual_distal", "generators must be distal on the residual");
    }
    group_verdict(ck, at(rep, "group", ""), duals, r, "/group");
    ck.expect(at(rep, "residual_zero", "").get<bool>() == res.is_zero(), "/residual_zero", "flag does not match the chain");
    ck.expect(res.is_zero() == (rep["group"]["verdict"] == "Ergodic"), "/group", "residual zero must match group ergodicity");
  } else if (command == "oracle-check") {
    ck.count();
    const std::size_t checked = at(rep, "checked", "").get<std::size_t>();
    const std::size_t finite = at(rep, "finite_orbits", "").get<std::size_t>();
    const std::size_t exceeded = at(rep, "exceeded_cap", "").get<std::size_t>();
    ck.expect(checked == finite + exceeded, "/checked", "counts do not add up");
    const RationalSubspace fin = decode_subspace(at(rep, "finite_orbit_subspace", ""), r, "/finite_orbit_subspace");
    for (const auto& d : duals) ck.expect(fin.is_invariant_under(d), "/finite_orbit_subspace", "subspace is not invariant");
    ck.expect(at(rep, "failures", "").empty(), "/failures", "oracle reported mismatches");
  }
}

inline void laurent_report(Checker& ck, const json& rep, const action::LaurentCyclicAction& a, const std::string& command) {
  const LaurentPoly& g = a.presentation();
  const int d = a.variables();
  const std::vector<Exponent> axes = d == 1 ? std::vector<Exponent>{Exponent{{1, 0}}}
                                            : std::vector<Exponent>{Exponent{{1, 0}}, Exponent{{0, 1}}};
  auto group_subject = [&]() { return d == 1 ? std::vector<Exponent>{axes[0]} : axes; };
  if (command == "analyze") {
    const json& dirs = at(rep, "directions", "");
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      const std::string w = "/directions/" + std::to_string(i);
      const Exponent n = decode_exponent(at(dirs[i], "direction", w), d, w + "/direction");
      bounded_verdict(ck, at(dirs[i], "verdict", w), g, {n}, false, w + "/verdict");
    }
    bounded_verdict(ck, at(rep, "group", ""), g, group_subject(), d == 2, "/group");
  } else if (command == "find-ergodic") {
    bounded_verdict(ck, at(rep, "group", ""), g, group_subject(), d == 2, "/group");
    const Exponent n = decode_exponent(at(rep, "direction", ""), d, "/direction");
    bounded_verdict(ck, at(rep, "verdict", ""), g, {n}, false, "/verdict");
    ck.expect(rep["verdict"]["verdict"] != "NotErgodic", "/verdict", "found direction must not be NotErgodic");
    ck.expect(at(rep, "bounded", "").get<bool>() == !rep["verdict"]["exact"].get<bool>(), "/bounded", "flag mismatch");
  } else if (command == "oracle-check") {
    const json& probes = at(rep, "probes", "");
    const LaurentPoly one = LaurentPoly::one(g.modulus(), d);
    for (std::size_t i = 0; i < probes.size(); ++i) {
      const std::string w = "/probes/" + std::to_string(i);
      if (!at(probes[i], "probe_finite", w).get<bool>()) continue;
      ck.count();
      const Exponent n = decode_exponent(at(probes[i], "direction", w), d, w + "/direction");
      const std::int64_t k = decode_int(at(probes[i], "k", w), w + "/k");
      ck.expect(k >= 1 && laurent_divides(g, LaurentPoly::binomial_minus_one(g.modulus(), d, n, k) * one).has_value(), w,
                "reported finite orbit does not close");
    }
    ck.expect(at(rep, "failures", "").empty(), "/failures", "oracle reported mismatches");
  }
}

inline void demo_report(Checker& ck, const json& rep) {
  const std::int64_t box = decode_int(at(rep, "box", ""), "/box");
  const json& factors = at(rep, "factors", "");
  const auto side = 2 * box + 1;
  ck.expect(factors.is_array() && static_cast<std::int64_t>(factors.size()) == side * side - 1, "/factors",
            "expected every nonzero lattice point of the box");
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    ck.count();
    const std::string w = "/factors/" + std::to_string(k);
    const json& idx = at(factors[k], "index", w);
    const json& el = at(factors[k], "ergodic_element", w);
    const std::int64_t i = decode_int(idx.at(0), w), j = decode_int(idx.at(1), w);
    const std::int64_t n = decode_int(el.at(0), w), m = decode_int(el.at(1), w);
    ck.expect((i != 0 || j != 0) && std::max(std::llabs(i), std::llabs(j)) <= box, w, "index outside the box");
    ck.expect(seen.insert({i, j}).second, w, "duplicate index");
    // j i - i j = 0: (i, j) acts trivially on its own factor.
    ck.expect(oracle::factor_exponent(i, j, i, j) == 0 && decode_int(at(factors[k], "self_exponent", w), w) == 0, w,
              "self exponent is not zero");
    const std::int64_t e = oracle::factor_exponent(i, j, n, m);
    ck.expect(e != 0 && decode_int(at(factors[k], "ergodic_exponent", w), w) == e, w, "ergodic element acts trivially");
  }
  const json& chain = at(rep, "chain", "");
  ck.expect(static_cast<std::int64_t>(chain.size()) == box, "/chain", "chain length must equal the box");
  std::size_t prev = static_cast<std::size_t>(-1);
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const std::string w = "/chain/" + std::to_string(k);
    const std::int64_t level = decode_int(at(chain[k], "level", w), w);
    std::size_t count = 0;
    for (const auto& [i, j] : seen)
      if (i + j >= level) ++count;
    ck.expect(count == at(chain[k], "factors_in_box", w).get<std::size_t>(), w, "factor count mismatch");
    ck.expect(count < prev, w, "chain is not strictly descending");
    prev = count;
  }
}

}  // namespace replay

/// Re-parses a report and replays every embedded certificate.
inline ReplayResult verify_report(const json& rep) {
  ReplayResult out;
  replay::Checker ck(out);
  ck.guarded("", [&] {
    if (at(rep, "schema_version", "").get<int>() != 1) throw SchemaError("/schema_version", "unsupported schema version");
    const std::string command = at(rep, "command", "").get<std::string>();
    const std::string status = at(rep, "status", "").get<std::string>();
    if (command == "demo-e2") {
      replay::demo_report(ck, rep);
      return;
    }
    const action::ValidationResult v = action::validate(parse_document(at(rep, "input", "")));
    if (status == "invalid") {
      ck.count();
      ck.expect(!v.ok(), "/status", "input validates but the report says invalid");
      return;
    }
    if (!v.ok()) throw SchemaError("/input", "embedded input does not validate");
    if (const auto* m = std::get_if<action::MatrixAction>(&*v.action)) {
      if (status == "not_ergodic") {
        replay::group_verdict(ck, at(rep, "group", ""), m->dual_generators(), m->dimension(), "/group");
        ck.expect(rep["group"]["verdict"] == "NotErgodic", "/group", "status requires a NotErgodic verdict");
      } else {
        replay::matrix_report(ck, rep, *m, command);
      }
    } else {
      const auto& l = std::get<action::LaurentCyclicAction>(*v.action);
      if (status == "not_ergodic") {
        const int d = l.variables();
        std::vector<Exponent> subject{Exponent{{1, 0}}};
        if (d == 2) subject.push_back(Exponent{{0, 1}});
        replay::bounded_verdict(ck, at(rep, "group", ""), l.presentation(), subject, d == 2, "/group");
        ck.expect(rep["group"]["verdict"] == "NotErgodic", "/group", "status requires a NotErgodic verdict");
      } else {
        replay::laurent_report(ck, rep, l, command);
      }
    }
  });
  return out;
}

}  // namespace algdyn::io
