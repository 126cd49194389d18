#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "algdyn/core/integer.hpp"
#include "algdyn/core/matrix.hpp"
#include "algdyn/core/polynomial.hpp"

namespace algdyn::toral {

enum class VerdictKind { Ergodic, NotErgodic, Distal, NotDistal };

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Ergodic: return "Ergodic";
    case VerdictKind::NotErgodic: return "NotErgodic";
    case VerdictKind::Distal: return "Distal";
    case VerdictKind::NotDistal: return "NotDistal";
  }
  return "?";
}

struct CyclotomicMultiplicity {
  std::int64_t order = 0;
  unsigned multiplicity = 0;
  friend bool operator==(const CyclotomicMultiplicity&, const CyclotomicMultiplicity&) = default;
};

/// gcd(char_poly, Phi_d) = 1 for every listed d; the list is every d with
/// phi(d) <= dim.
struct NoRootOfUnityEigenvalue {
  RatPolynomial char_poly;
  std::vector<std::int64_t> orders_checked;
  Integer exponent;  // M*(dim), the exponent of the determinant route
};

/// A nonzero character with finite orbit. For single elements `period` is
/// the least k with B^k chi = chi; for groups `orbit` lists the whole orbit.
struct WitnessCharacter {
  RatVector character;
  Integer period;
  std::vector<RatVector> orbit;
  std::vector<std::int64_t> root_of_unity_orders;
};

/// char_poly = prod Phi_d^{m_d}.
struct CyclotomicCharPoly {
  RatPolynomial char_poly;
  std::vector<CyclotomicMultiplicity> factors;
};

/// char_poly = residual * prod Phi_d^{m_d}, residual nonconstant and free of
/// admissible cyclotomic factors.
struct NonCyclotomicFactor {
  RatPolynomial char_poly;
  RatPolynomial residual;
  std::vector<CyclotomicMultiplicity> cyclotomic_part;
};

/// The intersection of ker(D_i^exponent - I) over all dual generators is 0.
struct EmptyFiniteOrbitSubspace {
  Integer exponent;
  std::vector<std::size_t> kernel_dims;
};

/// Group distality: every generator's characteristic polynomial factorization.
struct GeneratorFactorizations {
  std::vector<CyclotomicCharPoly> generators;
};

/// Group non-distality: a generator (1-based) that is not quasi-unipotent.
struct FailingGenerator {
  std::size_t index = 0;
  NonCyclotomicFactor factor;
};

using Certificate = std::variant<NoRootOfUnityEigenvalue, WitnessCharacter, CyclotomicCharPoly, NonCyclotomicFactor,
                                 EmptyFiniteOrbitSubspace, GeneratorFactorizations, FailingGenerator>;

inline const char* certificate_name(const Certificate& c) {
  static constexpr const char* names[] = {"NoRootOfUnityEigenvalue", "WitnessCharacter", "CyclotomicCharPoly",
                                          "NonCyclotomicFactor",     "EmptyFiniteOrbitSubspace",
                                          "GeneratorFactorizations", "FailingGenerator"};
  return names[c.index()];
}

struct Verdict {
  VerdictKind kind = VerdictKind::NotErgodic;
  Certificate certificate;

  bool ergodic() const { return kind == VerdictKind::Ergodic; }
  bool distal() const { return kind == VerdictKind::Distal; }
};

/// A single ergodic automorphism of a compact group is mixing of all orders;
/// the flag is read off the verdict, nothing dynamical is computed.
inline bool mixing_flag(const Verdict& v) { return v.kind == VerdictKind::Ergodic; }

}  // namespace algdyn::toral
