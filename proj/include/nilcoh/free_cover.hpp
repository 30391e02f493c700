#pragma once

#include <functional>

#include "nilcoh/ce.hpp"
#include "nilcoh/free_nilpotent.hpp"

namespace nilcoh {

/// Cohomology over a free nilpotent cover pi: f_{n,r} -> g, computed without
/// materializing the cover's Chevalley-Eilenberg complex. The key recurrence:
/// a 1-cochain psi with d(psi) = c is determined by its generator values via
///   psi([u,v]) = u psi(v) - v psi(u) - c(u ^ v)
/// on Hall defining pairs, and the only obstructions to descending from the
/// free Lie algebra to its class-r truncation sit on the Hall words of
/// degree r+1. So coboundary membership on the cover is a small linear
/// system in the generator values.
class FreeCoverSolver {
public:
  /// gens: images in g of the free generators x_1..x_n; pi is the universal
  /// homomorphism, required to be surjective. m lives over g and is pulled
  /// back through pi implicitly.
  FreeCoverSolver(LiePtr g, GModule m, std::vector<Vec> gens, std::size_t r);

  std::size_t generators() const { return gens_.size(); }
  std::size_t cover_dim() const { return n_words_r_; }
  std::size_t step() const { return r_; }

  /// dim Z^1(f_{n,r}, M) and dim H^1(f_{n,r}, M).
  std::size_t z1_dim() const;
  std::size_t h1_dim() const;

  /// Kernel of pi^2: H^2(g,M) -> H^2(f_{n,r},M), as a subspace of the chart.
  FilteredH2 pullback_kernel(const H2Chart& chart) const;

  /// dim Hom_g(n/[n,n], M) for n = ker pi, parameterized by the values of an
  /// equivariant map on ideal generators of n.
  std::size_t kernel_hom_dim() const;

  /// Basis of Hom_g(n/[n,n], M), each map as a dim(M) x cover_dim() matrix
  /// over ambient cover coordinates; only its restriction to ker pi is
  /// meaningful.
  std::vector<Matrix> kernel_hom_basis() const;

private:
  void propagate(std::size_t width, const std::vector<std::optional<Matrix>>& gen_values,
                 const std::function<const Matrix*(std::size_t)>& cocycle_term,
                 const std::function<void(const Matrix&)>& obstruction_sink) const;
  /// Kernel of the obstruction system in (generator values, z coefficients);
  /// the z block sits after the gens.size() * dim(M) value columns.
  Subspace solve_boundary_system(const Subspace* z) const;
  Subspace hom_kernel(std::vector<Matrix>* basis) const;

  LiePtr g_;
  GModule m_;
  std::vector<Vec> gens_;
  std::size_t r_;
  HallSkeleton skel_;          // words of f_{n, r+1}
  std::size_t n_words_r_;      // words of degree <= r
  std::vector<Vec> pi_img_;    // pi(word), degree <= r
  std::vector<std::optional<Matrix>> rho_;  // action of pi(word); nullopt if zero
};

}  // namespace nilcoh
