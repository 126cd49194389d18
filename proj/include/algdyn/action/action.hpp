#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "algdyn/core/errors.hpp"
#include "algdyn/core/laurent.hpp"
#include "algdyn/core/matrix.hpp"

namespace algdyn::action {

enum class MatrixKind { Toral, Solenoid };

inline const char* to_string(MatrixKind k) { return k == MatrixKind::Toral ? "toral" : "solenoid"; }

/// Transpose-inverse of an automorphism: the matrix by which it acts on
/// characters.
inline RatMatrix dual_matrix(const RatMatrix& a) {
  if (!a.square()) throw DimensionError("dual of a non-square matrix");
  try {
    return inverse(a.transpose());
  } catch (const DomainError&) {
    throw InvariantViolation("dual_matrix of a singular matrix");
  }
}

inline IntMatrix dual_matrix(const IntMatrix& a) {
  auto d = to_integer(dual_matrix(to_rational(a)));
  if (!d) throw InvariantViolation("dual of an integer matrix with determinant other than +-1");
  return *d;
}

/// A finitely generated group of pairwise commuting automorphisms of T^r
/// (integer generators of determinant +-1) or of the r-dimensional solenoid
/// (invertible rational generators). Only `validate` builds these.
class MatrixAction {
 public:
  MatrixKind kind() const { return kind_; }
  std::size_t dimension() const { return r_; }
  std::size_t generator_count() const { return generators_.size(); }
  const std::vector<RatMatrix>& generators() const { return generators_; }
  const std::vector<RatMatrix>& dual_generators() const { return duals_; }
  const RatMatrix& generator(std::size_t i) const { return generators_.at(i); }
  const RatMatrix& dual_generator(std::size_t i) const { return duals_.at(i); }

  /// Integer dual generators; only meaningful for toral actions.
  std::vector<IntMatrix> integer_dual_generators() const {
    std::vector<IntMatrix> out;
    for (const auto& d : duals_) {
      auto m = to_integer(d);
      if (!m) throw DomainError("dual generator is not integral; not a toral action");
      out.push_back(std::move(*m));
    }
    return out;
  }

  /// alpha_1^{e_1} ... alpha_n^{e_n}
  RatMatrix element(const std::vector<std::int64_t>& exponents) const {
    return product(generators_, exponents);
  }
  /// Dual of element(exponents).
  RatMatrix dual_element(const std::vector<std::int64_t>& exponents) const {
    return product(duals_, exponents);
  }

  /// Same group with every generator conjugated: g -> p g p^{-1}.
  MatrixAction conjugated(const RatMatrix& p) const {
    MatrixAction out = *this;
    const RatMatrix pinv = inverse(p);
    for (std::size_t i = 0; i < out.generators_.size(); ++i) {
      out.generators_[i] = p * generators_[i] * pinv;
      out.duals_[i] = dual_matrix(out.generators_[i]);
    }
    return out;
  }

 private:
  friend struct ActionBuilder;

  RatMatrix product(const std::vector<RatMatrix>& gens, const std::vector<std::int64_t>& exponents) const {
    if (exponents.size() != gens.size()) throw DimensionError("exponent vector length must equal generator count");
    RatMatrix acc = RatMatrix::identity(r_);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (exponents[i] == 0) continue;
      acc = acc * signed_power(gens[i], Integer(static_cast<long>(exponents[i])));
    }
    return acc;
  }

  MatrixKind kind_ = MatrixKind::Toral;
  std::size_t r_ = 0;
  std::vector<RatMatrix> generators_;
  std::vector<RatMatrix> duals_;
};

/// The Z^d-action n -> (a -> u^n a) on the module S / (g), S = F_p[u^{±1}].
class LaurentCyclicAction {
 public:
  Residue modulus() const { return g_.modulus(); }
  int variables() const { return g_.variables(); }
  /// Canonical presentation polynomial.
  const LaurentPoly& presentation() const { return g_; }

 private:
  friend struct ActionBuilder;
  LaurentPoly g_;
};

using CommutingAction = std::variant<MatrixAction, LaurentCyclicAction>;

/// Unvalidated description as read from an input document.
struct RawMatrixAction {
  MatrixKind kind = MatrixKind::Toral;
  std::size_t r = 0;
  std::vector<RatMatrix> generators;
};

struct RawLaurentAction {
  std::int64_t p = 0;
  int d = 0;
  std::vector<std::pair<Exponent, std::int64_t>> terms;
};

using RawAction = std::variant<RawMatrixAction, RawLaurentAction>;

enum class IssueKind { NonCommuting, NotInvertible, NotUnimodular, NotIntegral, BadDimension, BadModulus, BadVariables, UnitPresentation };

inline const char* to_string(IssueKind k) {
  switch (k) {
    case IssueKind::NonCommuting: return "NonCommuting";
    case IssueKind::NotInvertible: return "NotInvertible";
    case IssueKind::NotUnimodular: return "NotUnimodular";
    case IssueKind::NotIntegral: return "NotIntegral";
    case IssueKind::BadDimension: return "BadDimension";
    case IssueKind::BadModulus: return "BadModulus";
    case IssueKind::BadVariables: return "BadVariables";
    case IssueKind::UnitPresentation: return "UnitPresentation";
  }
  return "Unknown";
}

/// One validation failure. Generator indices are 1-based; `second` is set
/// only for NonCommuting.
struct ValidationIssue {
  IssueKind kind;
  std::size_t first = 0;
  std::size_t second = 0;
  std::string message;

  std::string label() const {
    std::string out = to_string(kind);
    if (kind == IssueKind::NonCommuting) {
      out += "{" + std::to_string(first) + "," + std::to_string(second) + "}";
    } else if (first != 0) {
      out += "{" + std::to_string(first) + "}";
    }
    return out;
  }
};

struct ValidationResult {
  std::optional<CommutingAction> action;
  std::vector<ValidationIssue> issues;

  bool ok() const { return action.has_value(); }
};

struct ActionBuilder {
  static MatrixAction matrix(MatrixKind kind, std::size_t r, std::vector<RatMatrix> gens) {
    MatrixAction a;
    a.kind_ = kind;
    a.r_ = r;
    for (const auto& g : gens) a.duals_.push_back(dual_matrix(g));
    a.generators_ = std::move(gens);
    return a;
  }
  static LaurentCyclicAction laurent(LaurentPoly g) {
    LaurentCyclicAction a;
    a.g_ = std::move(g);
    return a;
  }
};

inline ValidationResult validate_matrix(const RawMatrixAction& raw) {
  ValidationResult out;
  auto issue = [&](IssueKind k, std::size_t i, std::size_t j, std::string msg) {
    out.issues.push_back({k, i, j, std::move(msg)});
  };
  if (raw.r == 0) issue(IssueKind::BadDimension, 0, 0, "dimension must be at least 1");
  if (raw.generators.empty()) issue(IssueKind::BadDimension, 0, 0, "at least one generator is required");
  bool shapes_ok = raw.r > 0;
  for (std::size_t i = 0; i < raw.generators.size(); ++i) {
    const auto& g = raw.generators[i];
    if (g.rows() != raw.r || g.cols() != raw.r) {
      issue(IssueKind::BadDimension, i + 1, 0,
            "generator " + std::to_string(i + 1) + " is not " + std::to_string(raw.r) + "x" + std::to_string(raw.r));
      shapes_ok = false;
    }
  }
  if (!shapes_ok) return out;

  for (std::size_t i = 0; i < raw.generators.size(); ++i) {
    const auto& g = raw.generators[i];
    const std::string name = "generator " + std::to_string(i + 1);
    if (raw.kind == MatrixKind::Toral) {
      auto gi = to_integer(g);
      if (!gi) {
        issue(IssueKind::NotIntegral, i + 1, 0, name + " has non-integer entries");
        continue;
      }
      const Integer det = determinant(*gi);
      if (det == 0) {
        issue(IssueKind::NotInvertible, i + 1, 0, name + " is singular");
      } else if (abs(det) != 1) {
        issue(IssueKind::NotUnimodular, i + 1, 0, name + " has determinant " + det.get_str());
      }
    } else if (determinant(g) == 0) {
      issue(IssueKind::NotInvertible, i + 1, 0, name + " is singular");
    }
  }
  for (std::size_t i = 0; i < raw.generators.size(); ++i)
    for (std::size_t j = i + 1; j < raw.generators.size(); ++j)
      if (raw.generators[i] * raw.generators[j] != raw.generators[j] * raw.generators[i])
        issue(IssueKind::NonCommuting, i + 1, j + 1,
              "generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not commute");
  if (out.issues.empty()) out.action = ActionBuilder::matrix(raw.kind, raw.r, raw.generators);
  return out;
}

inline ValidationResult validate_laurent(const RawLaurentAction& raw) {
  ValidationResult out;
  bool p_ok = raw.p >= 2 && static_cast<Residue>(raw.p) <= kMaxModulus && is_prime(static_cast<Residue>(raw.p));
  if (!p_ok) out.issues.push_back({IssueKind::BadModulus, 0, 0, "modulus " + std::to_string(raw.p) + " is not a supported prime"});
  if (raw.d != 1 && raw.d != 2) {
    out.issues.push_back({IssueKind::BadVariables, 0, 0, "variable count must be 1 or 2"});
    return out;
  }
  if (raw.d == 1)
    for (const auto& [e, c] : raw.terms)
      if (e.v[1] != 0) {
        out.issues.push_back({IssueKind::BadVariables, 0, 0, "term uses a second variable but d = 1"});
        return out;
      }
  if (!p_ok) return out;
  LaurentPoly g = LaurentPoly::from_terms(static_cast<Residue>(raw.p), raw.d, raw.terms);
  if (g.is_zero() || g.is_unit()) {
    out.issues.push_back({IssueKind::UnitPresentation, 0, 0,
                          g.is_zero() ? "presentation polynomial is zero" : "presentation polynomial is a unit; the module is trivial"});
    return out;
  }
  out.action = ActionBuilder::laurent(unit_normalized(g));
  return out;
}

/// Checks every standing hypothesis and reports all failures together.
inline ValidationResult validate(const RawAction& raw) {
  return std::visit([](const auto& r) {
    if constexpr (std::is_same_v<std::decay_t<decltype(r)>, RawMatrixAction>) {
      return validate_matrix(r);
    } else {
      return validate_laurent(r);
    }
  }, raw);
}

/// Convenience for tests and tools: validate or throw with every issue listed.
inline MatrixAction make_matrix_action(MatrixKind kind, std::vector<RatMatrix> gens) {
  const std::size_t r = gens.empty() ? 0 : gens.front().rows();
  ValidationResult v = validate_matrix({kind, r, std::move(gens)});
  if (!v.ok()) {
    std::string msg = "invalid action:";
    for (const auto& i : v.issues) msg += " " + i.label();
    throw DomainError(msg);
  }
  return std::get<MatrixAction>(*v.action);
}

inline MatrixAction make_toral(std::vector<IntMatrix> gens) {
  std::vector<RatMatrix> rat;
  for (const auto& g : gens) rat.push_back(to_rational(g));
  return make_matrix_action(MatrixKind::Toral, std::move(rat));
}

inline MatrixAction make_solenoid(std::vector<RatMatrix> gens) {
  return make_matrix_action(MatrixKind::Solenoid, std::move(gens));
}

inline LaurentCyclicAction make_laurent(const LaurentPoly& g) {
  RawLaurentAction raw{static_cast<std::int64_t>(g.modulus()), g.variables(), {}};
  for (const auto& [e, c] : g.terms()) raw.terms.emplace_back(e, static_cast<std::int64_t>(c));
  ValidationResult v = validate_laurent(raw);
  if (!v.ok()) throw DomainError("invalid Laurent action: " + v.issues.front().message);
  return std::get<LaurentCyclicAction>(*v.action);
}

}  // namespace algdyn::action
