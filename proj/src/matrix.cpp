#include "nilcoh/matrix.hpp"

#include <algorithm>

namespace nilcoh {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

void add_scaled(Vec& acc, const Scalar& c, const Vec& v) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (!v[i].is_zero()) acc[i] += c * v[i];
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, error::code::internal, "row length mismatch");
    m.set_row(i, rows[i]);
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

Vec Matrix::col(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  std::copy(v.begin(), v.end(), a_.begin() + i * cols_);
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(cols_ == o.rows_ && field_ == o.field_, error::code::internal, "matmul shape/field mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_, error::code::internal,
          "matrix sum shape/field mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_, error::code::internal,
          "matrix difference shape/field mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) r.a_[i] -= o.a_[i];
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  require(v.size() == cols_, error::code::internal, "apply shape mismatch");
  Vec r = zero_vec(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Matrix Matrix::vstack(const Matrix& below) const {
  require(cols_ == below.cols_ && field_ == below.field_, error::code::internal, "vstack mismatch");
  Matrix r(field_, rows_ + below.rows_, cols_);
  std::copy(a_.begin(), a_.end(), r.a_.begin());
  std::copy(below.a_.begin(), below.a_.end(), r.a_.begin() + a_.size());
  return r;
}

Matrix Matrix::hstack(const Matrix& right) const {
  require(rows_ == right.rows_ && field_ == right.field_, error::code::internal, "hstack mismatch");
  Matrix r(field_, rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) r.at(i, cols_ + j) = right.at(i, j);
  }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

Rref Matrix::rref() const {
  return field_.is_rational() ? rref_rational() : rref_prime();
}

std::size_t Matrix::rank() const { return rref().rank; }

Rref Matrix::rref_prime() const {
  Matrix m = *this;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && m.at(piv, c).is_zero()) ++piv;
    if (piv == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(r, j), m.at(piv, j));
    Scalar inv = m.at(r, c).inv();
    for (std::size_t j = c; j < cols_; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {m, r, pivots};
}

Rref Matrix::rref_rational() const {
  // Clear denominators row by row, then fraction-free forward elimination.
  std::vector<std::vector<mpz_class>> z(rows_, std::vector<mpz_class>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols_; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), at(i, j).rat().get_den().get_mpz_t());
    for (std::size_t j = 0; j < cols_; ++j) {
      mpq_class v = at(i, j).rat() * l;
      z[i][j] = v.get_num();
    }
  }
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && z[piv][c] == 0) ++piv;
    if (piv == rows_) continue;
    std::swap(z[r], z[piv]);
    const mpz_class pc = z[r][c];
    for (std::size_t i = r + 1; i < rows_; ++i) {
      const mpz_class ic = z[i][c];
      for (std::size_t j = c; j < cols_; ++j) {
        mpz_class t = pc * z[i][j] - ic * z[r][j];
        mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      for (std::size_t j = 0; j < c; ++j) z[i][j] = 0;
    }
    prev = pc;
    pivots.push_back(c);
    ++r;
  }
  // Back substitution in rationals.
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m.at(i, j) = Scalar::from_mpq(field_, mpq_class(z[i][j]));
  for (std::size_t i = r; i-- > 0;) {
    std::size_t c = pivots[i];
    Scalar inv = m.at(i, c).inv();
    for (std::size_t j = c; j < cols_; ++j) m.at(i, j) *= inv;
    for (std::size_t k = 0; k < i; ++k) {
      Scalar f = m.at(k, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < cols_; ++j) m.at(k, j) -= f * m.at(i, j);
    }
  }
  return {m, r, pivots};
}

std::vector<Vec> Matrix::nullspace_basis() const {
  Rref rr = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free_c = 0; free_c < cols_; ++free_c) {
    if (is_pivot[free_c]) continue;
    Vec v = zero_vec(field_, cols_);
    v[free_c] = Scalar::one(field_);
    for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = -rr.mat.at(i, free_c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
  require(b.size() == rows_, error::code::internal, "solve shape mismatch");
  Matrix aug(field_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  Rref rr = aug.rref();
  if (!rr.pivots.empty() && rr.pivots.back() == cols_) return std::nullopt;
  Vec x = zero_vec(field_, cols_);
  for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.mat.at(i, cols_);
  return x;
}

Matrix Matrix::inverse() const {
  require(rows_ == cols_, error::code::internal, "inverse of a non-square matrix");
  Rref rr = hstack(identity(field_, rows_)).rref();
  require(rr.rank == rows_ && (rows_ == 0 || rr.pivots[rows_ - 1] == rows_ - 1),
          error::code::internal, "matrix is singular");
  Matrix inv(field_, rows_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rows_; ++j) inv.at(i, j) = rr.mat.at(i, cols_ + j);
  return inv;
}

}  // namespace nilcoh
