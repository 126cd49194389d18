#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "algdyn/core/errors.hpp"
#include "algdyn/core/matrix.hpp"

namespace algdyn {

/// Subspace of Q^r stored by the nonzero rows of its reduced row echelon
/// form. Two subspaces are equal iff their stored bases are equal.
class RationalSubspace {
 public:
  RationalSubspace() = default;

  static RationalSubspace zero(std::size_t ambient) { return RationalSubspace(ambient); }
  static RationalSubspace full(std::size_t ambient) {
    RationalSubspace s(ambient);
    s.basis_ = RatMatrix::identity(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
    return s;
  }

  static RationalSubspace span(const std::vector<RatVector>& vectors, std::size_t ambient) {
    RationalSubspace s(ambient);
    if (vectors.empty()) return s;
    s.assign_from(RatMatrix::from_rows(vectors, ambient));
    return s;
  }

  /// Right null space {v : m v = 0}.
  static RationalSubspace kernel(const RatMatrix& m) {
    const std::size_t n = m.cols();
    Echelon e = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    std::vector<RatVector> vectors;
    for (std::size_t free = 0; free < n; ++free) {
      if (is_pivot[free]) continue;
      RatVector v(n, Rational(0));
      v[free] = 1;
      for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
      vectors.push_back(std::move(v));
    }
    return span(vectors, n);
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  bool is_zero() const { return pivots_.empty(); }
  bool is_full() const { return pivots_.size() == ambient_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::vector<RatVector> basis() const {
    std::vector<RatVector> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }
  RatVector basis_vector(std::size_t i) const { return basis_.row(i); }

  /// Orthogonal complement under the standard pairing.
  RationalSubspace annihilator() const {
    if (is_zero()) return full(ambient_);
    return kernel(basis_);
  }

  bool contains(const RatVector& v) const {
    require_ambient(v.size());
    return coordinates_if_member(v).has_value();
  }
  bool contains(const RationalSubspace& other) const {
    require_ambient(other.ambient_);
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_vector(i))) return false;
    return true;
  }

  /// Coordinates of a member vector in the stored basis.
  RatVector coordinates(const RatVector& v) const {
    auto c = coordinates_if_member(v);
    if (!c) throw DomainError("vector is not in the subspace");
    return *c;
  }

  RatVector combine(const RatVector& coords) const {
    if (coords.size() != dim()) throw DimensionError("coordinate vector length mismatch");
    RatVector out(ambient_, Rational(0));
    for (std::size_t i = 0; i < dim(); ++i) {
      if (coords[i] == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j) out[j] += coords[i] * basis_(i, j);
    }
    return out;
  }

  friend RationalSubspace operator+(const RationalSubspace& a, const RationalSubspace& b) {
    a.require_ambient(b.ambient_);
    std::vector<RatVector> vs = a.basis();
    for (auto& v : b.basis()) vs.push_back(std::move(v));
    return span(vs, a.ambient_);
  }

  friend RationalSubspace intersect(const RationalSubspace& a, const RationalSubspace& b) {
    a.require_ambient(b.ambient_);
    return (a.annihilator() + b.annihilator()).annihilator();
  }

  RationalSubspace image(const RatMatrix& m) const {
    if (m.cols() != ambient_) throw DimensionError("map does not act on this ambient space");
    std::vector<RatVector> vs;
    for (std::size_t i = 0; i < dim(); ++i) vs.push_back(m * basis_vector(i));
    return span(vs, m.rows());
  }

  bool is_invariant_under(const RatMatrix& m) const { return contains(image(m)); }

  /// Matrix of m restricted to this (m-invariant) subspace, in the stored basis.
  RatMatrix restrict(const RatMatrix& m) const {
    RatMatrix out(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      RatVector c = coordinates(m * basis_vector(j));
      for (std::size_t i = 0; i < dim(); ++i) out(i, j) = c[i];
    }
    return out;
  }

  friend bool operator==(const RationalSubspace& a, const RationalSubspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const RationalSubspace& a, const RationalSubspace& b) { return !(a == b); }

 private:
  explicit RationalSubspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  void assign_from(const RatMatrix& rows) {
    Echelon e = rref(rows);
    basis_ = RatMatrix(e.rank(), ambient_);
    for (std::size_t i = 0; i < e.rank(); ++i)
      for (std::size_t j = 0; j < ambient_; ++j) basis_(i, j) = e.reduced(i, j);
    pivots_ = std::move(e.pivots);
  }

  // In RREF the coordinates of a member are its entries at the pivot columns.
  std::optional<RatVector> coordinates_if_member(const RatVector& v) const {
    require_ambient(v.size());
    RatVector c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    if (combine(c) != v) return std::nullopt;
    return c;
  }

  void require_ambient(std::size_t n) const {
    if (n != ambient_) throw DimensionError("ambient dimension mismatch");
  }

  std::size_t ambient_ = 0;
  RatMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Chosen complement of `inner` inside `outer`, giving coordinates on the
/// quotient outer / inner and the induced action of invariant maps.
class QuotientFrame {
 public:
  QuotientFrame(RationalSubspace outer, RationalSubspace inner)
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) throw DomainError("inner subspace is not contained in outer");
    RationalSubspace acc = inner_;
    for (const auto& v : outer_.basis()) {
      if (acc.contains(v)) continue;
      complement_.push_back(v);
      acc = acc + RationalSubspace::span({v}, outer_.ambient());
    }
    std::vector<RatVector> cols = inner_.basis();
    for (const auto& v : complement_) cols.push_back(v);
    joint_ = RatMatrix::from_columns(cols, outer_.ambient());
  }

  std::size_t dim() const { return complement_.size(); }
  const RationalSubspace& outer() const { return outer_; }
  const RationalSubspace& inner() const { return inner_; }
  const std::vector<RatVector>& complement() const { return complement_; }

  /// Quotient coordinates of a vector of `outer`.
  RatVector project(const RatVector& v) const {
    RatVector all = solve(v);
    return RatVector(all.begin() + static_cast<std::ptrdiff_t>(inner_.dim()), all.end());
  }

  RatVector lift(const RatVector& y) const {
    if (y.size() != dim()) throw DimensionError("quotient coordinate length mismatch");
    RatVector out(outer_.ambient(), Rational(0));
    for (std::size_t k = 0; k < dim(); ++k)
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += y[k] * complement_[k][j];
    return out;
  }

  /// Induced map on outer / inner; m must leave both subspaces invariant.
  RatMatrix induced(const RatMatrix& m) const {
    RatMatrix out(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      RatVector y = project(m * complement_[j]);
      for (std::size_t i = 0; i < dim(); ++i) out(i, j) = y[i];
    }
    return out;
  }

 private:
  RatVector solve(const RatVector& v) const {
    const std::size_t k = joint_.cols();
    RatMatrix aug(joint_.rows(), k + 1);
    for (std::size_t i = 0; i < joint_.rows(); ++i) {
      for (std::size_t j = 0; j < k; ++j) aug(i, j) = joint_(i, j);
      aug(i, k) = v[i];
    }
    Echelon e = rref(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == k) throw DomainError("vector is not in the outer subspace");
    RatVector out(k, Rational(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) out[e.pivots[r]] = e.reduced(r, k);
    return out;
  }

  RationalSubspace outer_;
  RationalSubspace inner_;
  std::vector<RatVector> complement_;
  RatMatrix joint_;
};

}  // namespace algdyn
