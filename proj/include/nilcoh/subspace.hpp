#pragma once

#include "nilcoh/matrix.hpp"

namespace nilcoh {

/// Subspace of k^n, canonically represented by its RREF basis rows
/// (zero rows removed). Equality of subspaces is matrix equality.
class Subspace {
public:
  static Subspace zero(const Field& f, std::size_t ambient);
  static Subspace full(const Field& f, std::size_t ambient);
  static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vec>& vectors);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  std::size_t quotient_dim(const Subspace& sub) const;

  /// v minus its projection onto the pivot coordinates; zero iff v in subspace.
  Vec reduce(const Vec& v) const;

  /// Coordinates of v in the RREF basis; requires membership.
  Vec coords(const Vec& v) const;

  /// Matrix of reduce() as a linear map on the ambient space.
  Matrix reduction_matrix() const;

  /// Lex-first standard basis vectors completing this subspace to the ambient
  /// space; returns their indices.
  std::vector<std::size_t> complement_std_indices() const;

private:
  Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace nilcoh
