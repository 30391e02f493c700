#pragma once

#include <map>
#include <optional>

#include "nilcoh/lie.hpp"

namespace nilcoh {

/// |H_i(n)| = (1/i) sum_{d | i} mu(d) n^{i/d}.
std::size_t witt_dim(std::size_t n, std::size_t i);
int moebius(std::size_t d);

/// Hall word over generators x1..xn; a generator when left < 0.
struct HallWord {
  int left = -1;
  int right = -1;
  std::size_t degree = 1;
};

/// Hall basis enumeration of f_{n,p}: the word tree and the degree layout,
/// with no structure constants behind it.
struct HallSkeleton {
  std::size_t n, p;
  std::vector<HallWord> words;
  std::vector<std::size_t> degree_start;  // degree_start[p + 1] = words.size()
};
HallSkeleton hall_skeleton(std::size_t n, std::size_t p);

/// Free p-step nilpotent Lie algebra f_{n,p} on a Hall basis.
///
/// Hall convention: generators x1 < ... < xn; [u,v] is a basis word iff
/// u, v are basis words, u > v, and when u = [a,b] also b <= v. Words are
/// ordered by (degree, generation order); within a degree, pairs are
/// generated with v ascending, then u ascending. Comparison of words is
/// comparison of arena indices.
class FreeNilpotent {
public:
  /// Resource guard: total dimension capped (default 2000, env NILCOH_DIM_CAP).
  static std::shared_ptr<const FreeNilpotent> build(std::size_t n, std::size_t p, const Field& f,
                                                    std::optional<std::size_t> cap = std::nullopt);

  /// Words and lazy bracket normalization only; algebra() stays null. Used
  /// where the full structure-constant table would be too large.
  static std::shared_ptr<const FreeNilpotent> build_basis_only(
      std::size_t n, std::size_t p, const Field& f, std::optional<std::size_t> cap = std::nullopt);

  /// Hall words per degree 1..p, by enumeration only (no structure constants).
  static std::vector<std::size_t> hall_degree_counts(std::size_t n, std::size_t p);

  std::size_t generators() const { return n_; }
  std::size_t step() const { return p_; }
  std::size_t dim() const { return words_.size(); }
  const Field& field() const { return field_; }
  const LiePtr& algebra() const { return algebra_; }
  const std::vector<HallWord>& words() const { return words_; }
  std::string word_label(std::size_t idx) const;

  /// First word index of each degree; degree_start[p_ + 1] = dim.
  const std::vector<std::size_t>& degree_start() const { return degree_start_; }
  std::size_t degree_of(std::size_t idx) const { return words_[idx].degree; }
  Subspace graded_piece(std::size_t d) const;  // H_d(n) as a coordinate subspace

  /// [word u, word v] expanded in the Hall basis; zero above degree p.
  SparseVec normalize_bracket(std::size_t u, std::size_t v) const;

  /// Evaluates word idx in g, given images of the generators.
  Vec evaluate_word(std::size_t idx, const LieAlgebra& g, const std::vector<Vec>& gen_images) const;

  /// Universal property: the unique homomorphism sending x_i to gen_images[i];
  /// requires the target to be nilpotent of class <= p (validated).
  AlgebraHom universal_hom(const LiePtr& g, const std::vector<Vec>& gen_images) const;

  /// this = f_{n,r} onto target = f_{n,p'}, p' <= r; kills degrees above p'.
  AlgebraHom truncation_projection(const FreeNilpotent& target) const;
  /// Vector space section of the projection from bigger = f_{n,p+1}.
  Matrix canonical_inclusion(const FreeNilpotent& bigger) const;

private:
  FreeNilpotent(std::size_t n, std::size_t p, Field f);
  void enumerate_words();

  bool is_hall_pair(std::size_t u, std::size_t v) const;
  const SparseVec& bracket_descending(std::size_t u, std::size_t v) const;  // requires u > v

  std::size_t n_, p_;
  Field field_;
  std::vector<HallWord> words_;
  std::vector<std::size_t> degree_start_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index_;
  mutable std::map<std::pair<std::size_t, std::size_t>, SparseVec> memo_;
  LiePtr algebra_;
};

using FreePtr = std::shared_ptr<const FreeNilpotent>;

/// The degree-3 monomials [x_i,[x_i,x_j]], [x_j,[x_i,x_j]] (i < j) and
/// [x_i,[x_j,x_k]], [x_j,[x_i,x_k]] (i < j < k), each expanded in the Hall
/// basis of f_{n,3}. 0-based generator indices in the labels.
std::vector<std::pair<std::string, Vec>> degree3_monomial_basis(const FreeNilpotent& f);

}  // namespace nilcoh
