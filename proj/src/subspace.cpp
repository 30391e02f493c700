#include "nilcoh/subspace.hpp"

namespace nilcoh {

Subspace Subspace::zero(const Field& f, std::size_t ambient) {
  return Subspace(ambient, Matrix(f, 0, ambient), {});
}

Subspace Subspace::full(const Field& f, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(ambient, Matrix::identity(f, ambient), piv);
}

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<Vec>& vectors) {
  Matrix m = Matrix::from_rows(f, ambient, vectors);
  auto rr = m.rref();
  Matrix b(f, rr.rank, ambient);
  for (std::size_t i = 0; i < rr.rank; ++i) b.set_row(i, rr.mat.row(i));
  return Subspace(ambient, std::move(b), rr.pivots);
}

Vec Subspace::reduce(const Vec& v) const {
  require(v.size() == ambient_, error::code::internal, "ambient mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    Scalar c = r[pivots_[i]];
    if (!c.is_zero()) add_scaled(r, -c, basis_.row(i));
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  require(ambient_ == o.ambient_, error::code::internal, "ambient mismatch");
  for (std::size_t i = 0; i < o.dim(); ++i)
    if (!contains(o.basis_.row(i))) return false;
  return true;
}

Vec Subspace::coords(const Vec& v) const {
  require(contains(v), error::code::internal, "coords of non-member");
  Vec c = zero_vec(field(), dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Matrix Subspace::reduction_matrix() const {
  // reduce(v) = v - sum_i v[pivot_i] * row_i, so the pivot columns of the
  // identity get the corresponding basis row subtracted.
  Matrix r = Matrix::identity(field(), ambient_);
  for (std::size_t i = 0; i < dim(); ++i) {
    Vec b = basis_.row(i);
    for (std::size_t j = 0; j < ambient_; ++j) r.at(j, pivots_[i]) -= b[j];
  }
  return r;
}

Subspace Subspace::sum(const Subspace& o) const {
  require(ambient_ == o.ambient_ && field() == o.field(), error::code::internal, "subspace sum mismatch");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < dim(); ++i) rows.push_back(basis_.row(i));
  for (std::size_t i = 0; i < o.dim(); ++i) rows.push_back(o.basis_.row(i));
  return span(field(), ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& o) const {
  require(ambient_ == o.ambient_ && field() == o.field(), error::code::internal, "subspace intersect mismatch");
  // Solve u A - v B = 0 via the nullspace of [A^T | -B^T].
  Matrix at = basis_.transpose();
  Matrix bt = o.basis_.transpose();
  for (std::size_t i = 0; i < bt.rows(); ++i)
    for (std::size_t j = 0; j < bt.cols(); ++j) bt.at(i, j) = -bt.at(i, j);
  Matrix sys = at.hstack(bt);
  std::vector<Vec> vecs;
  for (const Vec& uv : sys.nullspace_basis()) {
    Vec w = zero_vec(field(), ambient_);
    for (std::size_t i = 0; i < dim(); ++i) add_scaled(w, uv[i], basis_.row(i));
    vecs.push_back(std::move(w));
  }
  return span(field(), ambient_, vecs);
}

std::size_t Subspace::quotient_dim(const Subspace& sub) const {
  require(contains(sub), error::code::validate, "quotient_dim: not a subspace");
  return dim() - sub.dim();
}

std::vector<std::size_t> Subspace::complement_std_indices() const {
  std::vector<bool> piv(ambient_, false);
  for (auto p : pivots_) piv[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_; ++i)
    if (!piv[i]) out.push_back(i);
  return out;
}

}  // namespace nilcoh
