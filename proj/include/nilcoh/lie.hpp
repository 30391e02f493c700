#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nilcoh/subspace.hpp"

namespace nilcoh {

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

Vec densify(const Field& f, std::size_t n, const SparseVec& s);
SparseVec sparsify(const Vec& v);

/// Finite dimensional Lie algebra given by structure constants on a basis.
/// Brackets are stored for i < j only; antisymmetry is by construction and
/// the Jacobi identity is checked at construction time.
class LieAlgebra {
public:
  LieAlgebra(Field field, std::vector<std::string> labels,
             std::vector<std::tuple<std::size_t, std::size_t, SparseVec>> brackets);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// [e_i, e_j] for i != j, with antisymmetry applied.
  const SparseVec& bracket_basis_upper(std::size_t i, std::size_t j) const;  // requires i < j
  Vec bracket_basis(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& u, const Vec& v) const;

  Matrix ad(const Vec& x) const;
  Matrix ad_basis(std::size_t i) const;

  /// First violating triple with its defect, if any.
  struct JacobiViolation {
    std::size_t i, j, k;
    Vec defect;
  };
  std::optional<JacobiViolation> jacobi_violation() const;

  Subspace product_subspace(const Subspace& a, const Subspace& b) const;
  /// g^1 = g, g^{i+1} = [g, g^i]; throws error::code::validate if the series
  /// stabilizes at a nonzero subspace.
  std::vector<Subspace> lower_central_series() const;
  std::size_t nilpotency_class() const;
  std::vector<std::size_t> type() const;
  Subspace derived() const;
  Subspace center() const;

  std::size_t derivation_algebra_dim() const;
  std::size_t inner_derivations_dim() const;
  std::size_t h1_adjoint_dim() const;

  Subspace ideal_closure(const std::vector<Vec>& gens) const;
  bool is_ideal(const Subspace& s) const;

private:
  std::size_t upper_index(std::size_t i, std::size_t j) const { return i * dim_ + j; }

  Field field_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<SparseVec> c_;  // flat dim x dim, only i<j slots populated
  mutable std::optional<std::vector<Subspace>> lcs_cache_;
};

using LiePtr = std::shared_ptr<const LieAlgebra>;

/// Lie algebra homomorphism, verified on all basis pairs at construction.
class AlgebraHom {
public:
  AlgebraHom(LiePtr domain, LiePtr codomain, Matrix m, bool check = true);

  const LiePtr& domain() const { return dom_; }
  const LiePtr& codomain() const { return cod_; }
  const Matrix& matrix() const { return m_; }
  Vec apply(const Vec& v) const { return m_.apply(v); }
  bool is_surjective() const { return m_.rank() == cod_->dim(); }
  Subspace kernel() const;

private:
  LiePtr dom_, cod_;
  Matrix m_;
};

/// Quotient by an ideal, with basis the lex-first standard coordinates
/// completing the ideal. Returns the quotient and the projection.
struct Quotient {
  LiePtr algebra;
  AlgebraHom projection;
  std::vector<std::size_t> kept;  // ambient indices representing the basis
};
Quotient quotient_algebra(const LiePtr& g, const Subspace& ideal,
                          const std::vector<std::string>& labels = {});

LiePtr abelian_algebra(const Field& f, std::size_t m);
/// Heisenberg algebra h_n: basis x_1..x_n, y_1..y_n, z with [x_i, y_i] = z.
LiePtr heisenberg(const Field& f, std::size_t n);

}  // namespace nilcoh
