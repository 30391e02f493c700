#pragma once

#include "nilcoh/free_nilpotent.hpp"
#include "nilcoh/gmodule.hpp"

namespace nilcoh {

/// Lexicographic k-subsets of {0..m-1}.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t m, std::size_t k);

/// Coordinates of C^k(g, M): index = subset rank * dim(M) + module index,
/// subsets in lex order.
class CochainIndex {
public:
  CochainIndex(std::size_t m, std::size_t k, std::size_t dim_m);
  std::size_t size() const { return subsets_.size() * dim_m_; }
  std::size_t subsets() const { return subsets_.size(); }
  std::size_t dim_m() const { return dim_m_; }
  const std::vector<std::size_t>& subset(std::size_t rank) const { return subsets_[rank]; }
  std::size_t rank_of(const std::vector<std::size_t>& subset) const;
  std::size_t at(std::size_t rank, std::size_t b) const { return rank * dim_m_ + b; }
  /// Rank and sign of {x} union sorted set (x not in set); nullopt when x in set.
  std::optional<std::pair<std::size_t, int>> insert(std::size_t x,
                                                    const std::vector<std::size_t>& set) const;

private:
  std::size_t dim_m_;
  std::vector<std::vector<std::size_t>> subsets_;
  std::map<std::vector<std::size_t>, std::size_t> rank_;
};

/// Matrix of d^k : C^k(g,M) -> C^{k+1}(g,M),
/// d(w)(x_0,..,x_k) = sum_i (-1)^i x_i w(..x_i^..) +
///                    sum_{i<j} (-1)^{i+j} w([x_i,x_j], ..x_i^..x_j^..).
Matrix ce_differential(const LiePtr& g, const GModule& m, std::size_t k);

struct CohomologyResult {
  std::size_t k;
  Subspace z;  // cocycles
  Subspace b;  // coboundaries
  std::size_t z_dim, b_dim, h_dim;
};
CohomologyResult ce_cohomology(const LiePtr& g, const GModule& m, std::size_t k);

/// (b_0, ..., b_m) with trivial 1-dim coefficients.
std::vector<std::size_t> betti(const LiePtr& g);

/// Fixed coordinate system on H^2(g,M): representatives are the rref span of
/// Z^2 reduced modulo B^2, so coordinates are canonical per (g, M).
class H2Chart {
public:
  H2Chart(const LiePtr& g, const GModule& m);
  std::size_t dim() const { return c_.dim(); }
  const Subspace& cocycles() const { return z_; }
  const Subspace& coboundaries() const { return b_; }
  const Subspace& representatives() const { return c_; }
  Vec coords(const Vec& cocycle) const;          // class of a cocycle
  Vec representative(const Vec& h2coords) const;  // cocycle for a class
  bool is_coboundary(const Vec& cocycle) const { return b_.contains(cocycle); }

private:
  Subspace z_, b_, c_;
};

/// Basis adapted to a descending chain of weights: column a of p has
/// weight weights[a]; q = p^{-1}.
struct AdaptedBasis {
  Matrix p;
  Matrix q;
  std::vector<std::size_t> weights;
};
/// Adapted to the lower central series; weight = max i with the vector in g^i.
AdaptedBasis lcs_adapted_basis(const LieAlgebra& g);
/// Adapted to the ascending module filtration; weight = min j with the
/// vector in M_j.
AdaptedBasis filtration_adapted_basis(const ModuleFiltration& filt);

/// F_r C^k(g, M) per the weighted condition: in an adapted basis a cochain
/// lies in F_r iff its component at (b_{a_1},..,b_{a_k}; m_c) vanishes
/// unless level(c) <= r - w(a_1) - .. - w(a_k) + 1. Only k <= 3 is needed.
Subspace filtered_cochains(const LiePtr& g, const GModule& m, std::size_t k, long r);
Subspace filtered_cochains_with(const LiePtr& g, const GModule& m, std::size_t k, long r,
                                const AdaptedBasis& gb, const AdaptedBasis& mb);

/// F_r H^2 = ((Z^2 cap F_r C^2) + B^2) / B^2 inside the chart.
struct FilteredH2 {
  std::size_t dim;
  Subspace in_chart;
};
FilteredH2 filtered_h2(const LiePtr& g, const GModule& m, long r);
FilteredH2 filtered_h2(const LiePtr& g, const GModule& m, long r, const H2Chart& chart);

/// Matrix of f |-> f(phi ^ phi ): C^2(g, M) -> C^2(h, pullback M).
Matrix cochain2_pullback(const AlgebraHom& phi, std::size_t dim_m);

/// Kernel/cokernel of the map induced on H^2 by phi: h -> g, coefficients M
/// over g pulled back to h.
struct InducedH2 {
  std::size_t kernel_dim;
  std::size_t cokernel_dim;
  Subspace kernel_in_chart;  // in the H^2(g,M) chart
};
InducedH2 induced_map_h2(const AlgebraHom& phi, const GModule& m);
InducedH2 induced_map_h2(const AlgebraHom& phi, const GModule& m, const H2Chart& chart);

/// Value of a 2-cochain on u ^ v.
Vec eval_2cochain(const Vec& f, const CochainIndex& idx, const Vec& u, const Vec& v);

/// True iff every cocycle in Z^2(g, k) vanishes on Z(g) ^ [g,g].
bool cocycles_vanish_on_center_wedge_derived(const LiePtr& g);

}  // namespace nilcoh
