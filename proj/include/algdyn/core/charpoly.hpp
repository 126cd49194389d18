#pragma once

#include <vector>

#include "algdyn/core/matrix.hpp"
#include "algdyn/core/polynomial.hpp"

namespace algdyn {

namespace detail {

// Column vector of det(xI - M) coefficients, highest degree first, built by
// Berkowitz's division-free recursion on the trailing principal submatrices.
inline std::vector<Rational> berkowitz_vector(const RatMatrix& m, std::size_t offset) {
  const std::size_t n = m.rows() - offset;
  if (n == 0) return {Rational(1)};
  if (n == 1) return {Rational(1), Rational(-m(offset, offset))};

  const std::size_t sub = n - 1;
  // Toeplitz entries: 1, -a, -R C, -R A C, ..., -R A^{n-2} C
  std::vector<Rational> diags;
  diags.reserve(n + 1);
  diags.emplace_back(1);
  diags.emplace_back(-m(offset, offset));
  std::vector<Rational> col(sub), next(sub);
  for (std::size_t i = 0; i < sub; ++i) col[i] = m(offset + 1 + i, offset);
  for (std::size_t step = 0; step + 1 < n; ++step) {
    Rational dot = 0;
    for (std::size_t i = 0; i < sub; ++i) dot += m(offset, offset + 1 + i) * col[i];
    diags.push_back(-dot);
    if (step + 2 < n) {
      for (std::size_t i = 0; i < sub; ++i) {
        next[i] = 0;
        for (std::size_t j = 0; j < sub; ++j) next[i] += m(offset + 1 + i, offset + 1 + j) * col[j];
      }
      std::swap(col, next);
    }
  }

  const std::vector<Rational> tail = berkowitz_vector(m, offset + 1);
  std::vector<Rational> out(n + 1, Rational(0));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j < n && j <= i; ++j) out[i] += diags[i - j] * tail[j];
  return out;
}

}  // namespace detail

/// Monic characteristic polynomial det(xI - m).
inline RatPolynomial char_poly(const RatMatrix& m) {
  if (!m.square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  std::vector<Rational> high_first = detail::berkowitz_vector(m, 0);
  return RatPolynomial(std::vector<Rational>(high_first.rbegin(), high_first.rend()));
}

inline RatPolynomial char_poly(const IntMatrix& m) { return char_poly(to_rational(m)); }

}  // namespace algdyn
