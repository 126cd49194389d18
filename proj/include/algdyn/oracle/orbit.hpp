#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <unordered_set>
#include <utility>
#include <vector>

#include "algdyn/action/action.hpp"
#include "algdyn/core/errors.hpp"
#include "algdyn/core/matrix.hpp"

namespace algdyn::oracle {

class ZeroCharacter : public DomainError {
 public:
  ZeroCharacter() : DomainError("orbit of the zero character requested") {}
};

template <class T>
struct VectorHash {
  std::size_t operator()(const Vector<T>& v) const {
    std::size_t h = v.size();
    for (const auto& x : v) h = h * 1000003u ^ hash_value(x);
    return h;
  }
};

inline std::size_t bit_size(const Integer& v) { return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2); }
inline std::size_t bit_size(const Rational& v) { return bit_size(v.get_num()) + bit_size(v.get_den()) - 1; }

enum class OrbitStatus { Finite, ExceededCap };

/// Which limit stopped an unfinished enumeration.
enum class CapReason { None, VisitedCount, Magnitude };

struct OrbitOptions {
  std::size_t cap = 100000;
  /// Coordinates beyond this many bits abort the search (ExceededCap).
  std::size_t max_bits = 512;
  bool keep_members = false;
};

template <class T>
struct OrbitResultT {
  OrbitStatus status = OrbitStatus::ExceededCap;
  CapReason reason = CapReason::None;
  /// Orbit cardinality when Finite.
  std::size_t size = 0;
  std::size_t visited = 0;
  std::size_t max_bits = 0;
  /// Orbit members in discovery order, when requested and Finite.
  std::vector<Vector<T>> members;

  bool finite() const { return status == OrbitStatus::Finite; }
};

using OrbitResult = OrbitResultT<Integer>;

/// Breadth-first enumeration of the orbit of `start` under the group
/// generated by `generators` (inverses must be supplied by the caller).
template <class T>
OrbitResultT<T> enumerate_orbit(const std::vector<Matrix<T>>& generators, const Vector<T>& start,
                                const OrbitOptions& options) {
  OrbitResultT<T> out;
  std::unordered_set<Vector<T>, VectorHash<T>> seen;
  std::vector<Vector<T>> order;
  std::deque<const Vector<T>*> frontier;

  auto track_bits = [&](const Vector<T>& v) {
    for (const auto& x : v) out.max_bits = std::max(out.max_bits, bit_size(x));
  };

  auto [it, inserted] = seen.insert(start);
  frontier.push_back(&*it);
  track_bits(start);
  if (options.keep_members) order.push_back(start);

  while (!frontier.empty()) {
    const Vector<T>* cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      Vector<T> next = g * *cur;
      auto [pos, fresh] = seen.insert(std::move(next));
      if (!fresh) continue;
      track_bits(*pos);
      out.visited = seen.size();
      if (seen.size() > options.cap) {
        out.reason = CapReason::VisitedCount;
        return out;
      }
      if (out.max_bits > options.max_bits) {
        out.reason = CapReason::Magnitude;
        return out;
      }
      if (options.keep_members) order.push_back(*pos);
      frontier.push_back(&*pos);
    }
  }
  out.visited = seen.size();
  // Closure re-check: every generator maps the set into itself.
  for (const auto& v : seen)
    for (const auto& g : generators)
      if (!seen.count(g * v)) throw InvariantViolation("enumerated orbit is not closed");
  out.status = OrbitStatus::Finite;
  out.size = seen.size();
  out.members = std::move(order);
  return out;
}

/// Dual generators together with their inverses.
inline std::vector<RatMatrix> dual_generators_with_inverses(const action::MatrixAction& a) {
  std::vector<RatMatrix> out;
  for (const auto& d : a.dual_generators()) {
    out.push_back(d);
    out.push_back(inverse(d));
  }
  return out;
}

/// Orbit of an integer character under the dual action of a toral group.
inline OrbitResult orbit_bfs(const action::MatrixAction& a, const IntVector& chi, const OrbitOptions& options = {}) {
  if (chi.size() != a.dimension()) throw DimensionError("character length must equal the torus dimension");
  if (std::all_of(chi.begin(), chi.end(), [](const Integer& x) { return x == 0; })) throw ZeroCharacter();
  if (options.cap < 1) throw DomainError("orbit cap must be at least 1");
  std::vector<IntMatrix> gens;
  for (const auto& d : a.integer_dual_generators()) {
    gens.push_back(d);
    gens.push_back(*to_integer(inverse(to_rational(d))));
  }
  return enumerate_orbit(gens, chi, options);
}

}  // namespace algdyn::oracle
