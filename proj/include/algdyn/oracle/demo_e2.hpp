#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "algdyn/core/errors.hpp"

namespace algdyn::oracle {

// Z^2 acts on K = prod K_{i,j}, where for (i,j) != (0,0) the factor K_{i,j}
// is a copy of a compact group M with (n, m) acting by tau^{m i - n j}, tau a
// fixed ergodic automorphism of M. Everything here is exponent bookkeeping
// on tau; no group M is materialized.

struct ProductDemoSpec {
  std::int64_t box = 4;
};

/// Exponent of tau by which (n, m) acts on the factor K_{i,j}.
inline std::int64_t factor_exponent(std::int64_t i, std::int64_t j, std::int64_t n, std::int64_t m) {
  return m * i - n * j;
}

struct FactorCertificate {
  std::int64_t i = 0, j = 0;
  /// Exponent of (i, j) on its own factor; always 0, so (i, j) is not ergodic there.
  std::int64_t self_exponent = 0;
  /// A group element acting on K_{i,j} by a nonzero power of tau, making the
  /// whole group ergodic on this factor.
  std::int64_t ergodic_n = 0, ergodic_m = 0, ergodic_exponent = 0;
};

/// K_n = prod_{i + j >= n} K_{i,j}, restricted to the box.
struct ChainLink {
  std::int64_t level = 0;
  std::size_t factors_in_box = 0;
  /// Index (level, 0): a factor of this link missing from the next one.
  std::int64_t separator_i = 0, separator_j = 0;
};

struct DemoE2Certificate {
  std::int64_t box = 0;
  std::vector<FactorCertificate> factors;
  std::vector<ChainLink> chain;
  bool identity_holds = true;
  bool chain_strict = true;
};

inline DemoE2Certificate demo_e2(const ProductDemoSpec& spec) {
  if (spec.box < 1) throw DomainError("demo box must be at least 1");
  const std::int64_t b = spec.box;
  DemoE2Certificate out;
  out.box = b;
  for (std::int64_t i = -b; i <= b; ++i) {
    for (std::int64_t j = -b; j <= b; ++j) {
      if (i == 0 && j == 0) continue;
      FactorCertificate f{i, j, factor_exponent(i, j, i, j)};
      if (j != 0) {
        f.ergodic_n = i + 1;
        f.ergodic_m = j;
      } else {
        f.ergodic_n = i;
        f.ergodic_m = j + 1;
      }
      f.ergodic_exponent = factor_exponent(i, j, f.ergodic_n, f.ergodic_m);
      out.identity_holds = out.identity_holds && f.self_exponent == 0 && f.ergodic_exponent != 0;
      out.factors.push_back(f);
    }
  }
  auto count_level = [&](std::int64_t level) {
    std::size_t c = 0;
    for (const auto& f : out.factors)
      if (f.i + f.j >= level) ++c;
    return c;
  };
  for (std::int64_t n = 1; n <= b; ++n) {
    ChainLink link{n, count_level(n), n, 0};
    // (n, 0) lies in K_n but not in K_{n+1}.
    out.chain_strict = out.chain_strict && link.separator_i + link.separator_j == n && count_level(n + 1) < link.factors_in_box;
    out.chain.push_back(link);
  }
  return out;
}

}  // namespace algdyn::oracle
