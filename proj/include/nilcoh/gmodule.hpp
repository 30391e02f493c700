#pragma once

#include "nilcoh/lie.hpp"

namespace nilcoh {

/// Module over a Lie algebra, given by one action matrix per basis vector.
/// The representation law rho([x,y]) = rho(x)rho(y) - rho(y)rho(x) is
/// verified on all basis pairs at construction.
class GModule {
public:
  GModule(LiePtr g, std::vector<Matrix> action, bool check = true);

  static GModule trivial(LiePtr g, std::size_t d);
  static GModule adjoint(LiePtr g);
  /// Module over phi's domain with action rho(x) = rho_M(phi(x)).
  static GModule pullback(const AlgebraHom& phi, const GModule& m);

  const LiePtr& algebra() const { return g_; }
  const Field& field() const { return g_->field(); }
  std::size_t dim() const { return dim_; }
  const Matrix& action_basis(std::size_t i) const { return action_[i]; }
  Matrix action_of(const Vec& x) const;
  Vec act(const Vec& x, const Vec& m) const;
  Vec act_basis(std::size_t i, const Vec& m) const { return action_[i].apply(m); }
  bool is_trivial_action() const;

  Subspace invariants() const;  // {m : rho(x) m = 0 for all x}

private:
  LiePtr g_;
  std::size_t dim_;
  std::vector<Matrix> action_;
};

/// Ascending filtration 0 = M_0 < M_1 < ... < M_q = M with
/// M_i = {m : rho(e) m in M_{i-1} for every basis e}; q is the nilpotency
/// degree of the module.
struct ModuleFiltration {
  std::vector<Subspace> levels;  // levels[i] = M_i, i = 0..q
  std::size_t q;
  /// levels[min(i, q)] with levels[0] for i <= 0, for convenience in the
  /// cochain filtration where indices go out of range.
  const Subspace& clamped(long i) const;
};

/// Throws error::code::validate when the filtration stabilizes below M.
ModuleFiltration ascending_filtration(const GModule& m);

/// Basis of {phi : M_A -> M_B linear, phi(x a) = x phi(a)} as matrices.
std::vector<Matrix> equivariant_hom_basis(const GModule& a, const GModule& b);

/// The g-module n/[n,n] for an ideal n = ker(pi) of f, with g = f/n acting
/// through lifts along pi. chart maps ambient f-vectors lying in n to
/// quotient coordinates.
struct InducedModule {
  GModule module;
  Subspace n;
  Subspace nn;       // [n,n]
  Matrix chart;      // module coords <- ambient f coords (valid on n)
  std::vector<Vec> reps;  // ambient representatives of the module basis
};
InducedModule induced_quotient_module(const AlgebraHom& pi);

}  // namespace nilcoh
