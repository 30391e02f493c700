#pragma once

#include "nilcoh/lie.hpp"

namespace nilcoh {

/// Exact kernel of a large set of homogeneous linear conditions.
///
/// A modular echelon (over F_p itself for prime fields, over a fixed large
/// word-sized prime for the rationals) screens the incoming rows; only rows
/// that are independent modulo the screen are kept for exact elimination.
/// The kernel of the kept rows contains the true kernel, and is certified
/// equal to it by exact dot products of every discarded row against the
/// kernel basis; any violating row is promoted to the kept set and the
/// kernel is recomputed, so an unlucky modulus costs time, never exactness.
class LinearSystem {
public:
  LinearSystem(const Field& f, std::size_t width);

  std::size_t width() const { return width_; }
  std::size_t rows() const { return rows_.size(); }

  void add_row(const SparseVec& row);
  void add_row(const Vec& row);

  /// {x : row . x = 0 for every row}.
  Subspace kernel() const;

private:
  Field field_;
  std::size_t width_;
  std::vector<SparseVec> rows_;
};

}  // namespace nilcoh
