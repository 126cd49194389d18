#pragma once

// Deterministic generators of commuting matrix families for property tests
// and the acceptance binary.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "algdyn/algdyn.hpp"

namespace algdyn::fixtures {

using Rng = std::mt19937_64;

inline IntMatrix imat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline IntMatrix fib() { return imat({{0, 1}, {1, 1}}); }
inline IntMatrix shear() { return imat({{1, 1}, {0, 1}}); }
inline IntMatrix rot() { return imat({{0, -1}, {1, 0}}); }

inline IntMatrix block_diag(const std::vector<IntMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  IntMatrix out(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return out;
}

/// Kronecker product a (x) b.
inline IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline IntMatrix scaled(IntMatrix m, std::int64_t c) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= static_cast<long>(c);
  return m;
}

inline IntMatrix int_power(const IntMatrix& m, long e) {
  auto r = to_integer(signed_power(to_rational(m), Integer(e)));
  return *r;
}

inline IntMatrix int_inverse(const IntMatrix& m) { return *to_integer(inverse(to_rational(m))); }

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Product of `steps` random elementary operations; determinant +-1.
inline IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps) {
  IntMatrix m = IntMatrix::identity(n);
  if (n == 1) {
    m(0, 0) = uniform(rng, 0, 1) ? 1 : -1;
    return m;
  }
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 2));
    if (j >= i) ++j;
    const long c = uniform(rng, 0, 1) ? 1 : -1;
    IntMatrix e = IntMatrix::identity(n);
    e(i, j) = c;
    m = m * e;
  }
  return m;
}

/// Unimodular k x k matrix (k >= 2) without root-of-unity eigenvalues.
inline IntMatrix random_ergodic_seed(Rng& rng, std::size_t k) {
  for (;;) {
    IntMatrix m = random_unimodular(rng, k, static_cast<int>(k) + 2);
    bool small = true;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) small = small && abs(m(i, j)) <= 4;
    if (!small) continue;
    if (toral::classify_ergodic(to_rational(m)).ergodic()) return m;
  }
}

/// I + N with N strictly upper triangular.
inline IntMatrix random_unipotent(Rng& rng, std::size_t k) {
  IntMatrix m = IntMatrix::identity(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) m(i, j) = uniform(rng, -2, 2);
  return m;
}

inline IntMatrix conjugate(const IntMatrix& m, const IntMatrix& p) { return p * m * int_inverse(p); }

struct Family {
  std::vector<IntMatrix> generators;
  std::string shape;  // block description, for failure messages
};

/// Commuting family on Z^r, r <= max_dim: block-diagonal with ergodic,
/// unipotent and finite-order blocks, each generator a signed power of the
/// block bases, then conjugated by a random unimodular matrix.
inline Family random_commuting_family(Rng& rng, std::size_t max_dim = 6, std::size_t max_gens = 3) {
  struct Block {
    IntMatrix base;
    bool allow_sign;
  };
  std::vector<Block> blocks;
  std::string shape;
  const auto r = static_cast<std::size_t>(uniform(rng, 2, static_cast<std::int64_t>(max_dim)));
  std::size_t used = 0;
  while (used < r) {
    const std::size_t room = r - used;
    const std::int64_t kind = uniform(rng, 0, 2);
    if (kind == 0 && room >= 2) {
      const std::size_t k = room >= 3 && uniform(rng, 0, 1) ? 3 : 2;
      blocks.push_back({random_ergodic_seed(rng, k), true});
      shape += "E" + std::to_string(k);
    } else if (kind == 1 && room >= 2) {
      blocks.push_back({rot(), false});
      shape += "R";
    } else {
      const std::size_t k = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(std::min<std::size_t>(room, 3))));
      blocks.push_back({random_unipotent(rng, k), true});
      shape += "U" + std::to_string(k);
    }
    used += blocks.back().base.rows();
  }
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_gens)));
  const IntMatrix p = random_unimodular(rng, r, 2);
  Family fam;
  fam.shape = shape;
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<IntMatrix> parts;
    for (const auto& b : blocks) {
      IntMatrix part = int_power(b.base, static_cast<long>(uniform(rng, -2, 2)));
      if (b.allow_sign && uniform(rng, 0, 3) == 0) part = -part;
      parts.push_back(part);
    }
    fam.generators.push_back(conjugate(block_diag(parts), p));
  }
  return fam;
}

/// Commuting unipotent family: polynomials in a single nilpotent N, conjugated.
inline Family random_unipotent_family(Rng& rng, std::size_t max_dim = 5, std::size_t max_gens = 3) {
  const auto r = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_dim)));
  const IntMatrix n = random_unipotent(rng, r) - IntMatrix::identity(r);
  const auto count = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_gens)));
  const IntMatrix p = random_unimodular(rng, r, 2);
  Family fam;
  fam.shape = "N" + std::to_string(r);
  for (std::size_t g = 0; g < count; ++g) {
    IntMatrix acc = IntMatrix::identity(r);
    IntMatrix pw = n;
    for (std::size_t k = 1; k < r; ++k) {
      acc = acc + scaled(pw, uniform(rng, -2, 2));
      pw = pw * n;
    }
    fam.generators.push_back(conjugate(acc, p));
  }
  return fam;
}

/// Commuting (ergodic, distal) pair: alpha = S (x) I_2, beta = I_k (x) D with
/// D a unipotent or finite-order 2 x 2 matrix, conjugated.
inline std::pair<IntMatrix, IntMatrix> random_ergodic_distal_pair(Rng& rng) {
  const std::size_t k = uniform(rng, 0, 1) ? 3 : 2;
  const IntMatrix s = random_ergodic_seed(rng, k);
  IntMatrix d;
  switch (uniform(rng, 0, 3)) {
    case 0: d = int_power(shear(), static_cast<long>(uniform(rng, 1, 3))); break;
    case 1: d = rot(); break;
    case 2: d = -shear(); break;
    default: d = -IntMatrix::identity(2); break;
  }
  const IntMatrix a = kron(s, IntMatrix::identity(2));
  const IntMatrix b = kron(IntMatrix::identity(k), d);
  const IntMatrix p = random_unimodular(rng, 2 * k, 2);
  return {conjugate(a, p), conjugate(b, p)};
}

inline std::vector<RatMatrix> duals_of(const std::vector<IntMatrix>& gens) {
  std::vector<RatMatrix> out;
  for (const auto& g : gens) out.push_back(action::dual_matrix(to_rational(g)));
  return out;
}

}  // namespace algdyn::fixtures
