#pragma once

#include <cstdint>
#include <vector>

#include "algdyn/core/errors.hpp"
#include "algdyn/core/integer.hpp"
#include "algdyn/core/polynomial.hpp"

namespace algdyn {

inline std::int64_t euler_phi(std::int64_t d) {
  if (d <= 0) throw DomainError("euler_phi needs a positive argument");
  std::int64_t result = d;
  std::int64_t n = d;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Every d >= 1 with phi(d) <= r, ascending. These are exactly the possible
/// orders of a root-of-unity eigenvalue of an r x r rational matrix.
inline std::vector<std::int64_t> root_of_unity_orders(std::int64_t r) {
  if (r < 1) throw DomainError("dimension must be positive");
  std::vector<std::int64_t> out;
  // phi(d) >= sqrt(d / 2)
  const std::int64_t limit = 2 * r * r + 1;
  for (std::int64_t d = 1; d <= limit; ++d)
    if (euler_phi(d) <= r) out.push_back(d);
  return out;
}

/// lcm{ d : phi(d) <= r }: a common exponent that sends every root-of-unity
/// eigenvalue of an r x r rational matrix to 1.
inline Integer m_star(std::int64_t r) {
  Integer acc = 1;
  for (std::int64_t d : root_of_unity_orders(r)) acc = lcm(acc, Integer(static_cast<long>(d)));
  return acc;
}

inline IntPolynomial cyclotomic(std::int64_t d) {
  if (d <= 0) throw DomainError("cyclotomic index must be positive");
  RatPolynomial acc = RatPolynomial::x_pow_minus_one(static_cast<std::size_t>(d));
  for (std::int64_t e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    acc = exact_quotient(acc, to_rational(cyclotomic(e)));
  }
  std::vector<Integer> c;
  for (const auto& q : acc.coefficients()) {
    if (!is_integral(q)) throw InvariantViolation("non-integral cyclotomic coefficient");
    c.emplace_back(q.get_num());
  }
  return IntPolynomial(std::move(c));
}

}  // namespace algdyn
