#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

#include "algdyn/action/action.hpp"
#include "algdyn/core/subspace.hpp"
#include "algdyn/oracle/orbit.hpp"
#include "algdyn/toral/engine.hpp"

namespace algdyn::oracle {

enum class MismatchKind {
  /// BFS closed a finite orbit for a character outside the finite-orbit subspace.
  FiniteOutside,
  /// BFS hit its cap on a character inside the finite-orbit subspace.
  CapInside,
};

inline const char* to_string(MismatchKind k) { return k == MismatchKind::FiniteOutside ? "FiniteOutside" : "CapInside"; }

struct Mismatch {
  IntVector character;
  MismatchKind kind;
};

struct CrossValidationReport {
  std::size_t checked = 0;
  std::size_t inside_subspace = 0;
  std::size_t finite_orbits = 0;
  std::size_t exceeded_cap = 0;
  std::size_t largest_finite_orbit = 0;
  std::vector<Mismatch> failures;

  bool ok() const { return failures.empty(); }
};

/// Every nonzero integer vector with sup-norm <= bound, lexicographic.
inline std::vector<IntVector> characters_in_box(std::size_t dim, std::int64_t bound) {
  std::vector<IntVector> out;
  std::vector<std::int64_t> cur(dim, -bound);
  for (;;) {
    if (std::any_of(cur.begin(), cur.end(), [](std::int64_t x) { return x != 0; })) {
      IntVector v;
      for (auto x : cur) v.emplace_back(static_cast<long>(x));
      out.push_back(std::move(v));
    }
    std::size_t k = dim;
    while (k > 0 && cur[k - 1] == bound) cur[--k] = -bound;
    if (k == 0) break;
    ++cur[k - 1];
  }
  return out;
}

/// Differential test of the analytic finite-orbit subspace against BFS on
/// every character in the box. ExceededCap outside the subspace counts as
/// consistent; it is never evidence of an infinite orbit.
inline CrossValidationReport cross_validate(const action::MatrixAction& a, std::int64_t norm_bound,
                                            const OrbitOptions& options = {}, unsigned workers = 0) {
  if (a.kind() != action::MatrixKind::Toral) throw DomainError("orbit enumeration needs a toral action");
  if (norm_bound < 1) throw DomainError("norm bound must be at least 1");
  const RationalSubspace fin = toral::finite_orbit_subspace(a);
  const std::vector<IntVector> chars = characters_in_box(a.dimension(), norm_bound);

  struct Row {
    bool inside = false;
    OrbitStatus status = OrbitStatus::ExceededCap;
    std::size_t size = 0;
  };
  std::vector<Row> rows(chars.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, chars.size())));
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < chars.size(); i += step) {
      rows[i].inside = fin.contains(to_rational(chars[i]));
      const OrbitResult r = orbit_bfs(a, chars[i], options);
      rows[i].status = r.status;
      rows[i].size = r.size;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w, workers);
  work(0, workers);
  for (auto& t : pool) t.join();

  CrossValidationReport out;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const Row& row = rows[i];
    ++out.checked;
    if (row.inside) ++out.inside_subspace;
    if (row.status == OrbitStatus::Finite) {
      ++out.finite_orbits;
      out.largest_finite_orbit = std::max(out.largest_finite_orbit, row.size);
      if (!row.inside) out.failures.push_back({chars[i], MismatchKind::FiniteOutside});
    } else {
      ++out.exceeded_cap;
      if (row.inside) out.failures.push_back({chars[i], MismatchKind::CapInside});
    }
  }
  return out;
}

}  // namespace algdyn::oracle
