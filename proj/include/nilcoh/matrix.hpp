#pragma once

#include <optional>
#include <vector>

#include "nilcoh/field.hpp"

namespace nilcoh {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
void add_scaled(Vec& acc, const Scalar& c, const Vec& v);
bool is_zero(const Vec& v);

struct Rref;

/// Dense matrix over one exact field, row major.
class Matrix {
public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Vec apply(const Vec& v) const;  // this * v
  Matrix vstack(const Matrix& below) const;
  Matrix hstack(const Matrix& right) const;

  bool operator==(const Matrix& o) const;

  /// Reduced row echelon form; also reports rank and pivot columns.
  /// Over Q the forward pass is fraction-free (Bareiss) on a cleared-denominator
  /// copy, followed by exact back substitution; over F_p plain Gauss-Jordan.
  Rref rref() const;

  std::size_t rank() const;

  /// Basis rows of {x : A x = 0}.
  std::vector<Vec> nullspace_basis() const;

  /// One solution of A x = b, if consistent.
  std::optional<Vec> solve(const Vec& b) const;

  /// Inverse of a square invertible matrix.
  Matrix inverse() const;

private:
  Rref rref_prime() const;
  Rref rref_rational() const;

  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

struct Rref {
  Matrix mat;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

}  // namespace nilcoh
