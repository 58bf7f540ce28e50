/* Copyright 2026 The diacat Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Exact dense linear algebra over Q and F_p. Everything here is a plain value
// type; nothing is mutated after it has been handed to another module.

#ifndef DIACAT_LINALG_HPP
#define DIACAT_LINALG_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "diacat/scalar.hpp"

namespace diacat {

class Vector {
public:
  Vector() : Vector(Field::rationals(), 0) {}
  Vector(Field f, std::size_t n) : field_(f), x_(n, Scalar::zero(f)) {}
  Vector(Field f, std::vector<Scalar> coords);

  static Vector zero(Field f, std::size_t n) { return Vector(f, n); }
  static Vector unit(Field f, std::size_t n, std::size_t i);

  Field field() const noexcept { return field_; }
  std::size_t size() const noexcept { return x_.size(); }
  const Scalar &operator[](std::size_t i) const { return x_[i]; }
  Scalar &operator[](std::size_t i) { return x_[i]; }
  auto begin() const { return x_.begin(); }
  auto end() const { return x_.end(); }

  bool is_zero() const noexcept;
  /// Index of the first nonzero entry, or size() when zero.
  std::size_t leading() const noexcept;

  Vector &operator+=(const Vector &o);
  Vector &operator-=(const Vector &o);
  Vector &operator*=(const Scalar &s);
  /// this += s * o
  void axpy(const Scalar &s, const Vector &o);
  Vector operator-() const;

  friend Vector operator+(Vector a, const Vector &b) { return a += b; }
  friend Vector operator-(Vector a, const Vector &b) { return a -= b; }
  friend Vector operator*(const Scalar &s, Vector v) { return v *= s; }
  friend bool operator==(const Vector &a, const Vector &b);
  friend bool operator!=(const Vector &a, const Vector &b) { return !(a == b); }

  /// Concatenation (a, b).
  static Vector concat(const Vector &a, const Vector &b);
  Vector slice(std::size_t from, std::size_t count) const;

  std::string to_string() const;

private:
  Field field_;
  std::vector<Scalar> x_;
};

/// Row-major dense matrix. A linear map V -> W with dim V = n, dim W = m is an
/// m x n matrix whose columns are the images of the basis vectors.
class Matrix {
public:
  Matrix() : Matrix(Field::rationals(), 0, 0) {}
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

  static Matrix zero(Field f, std::size_t rows, std::size_t cols) {
    return Matrix(f, rows, cols);
  }
  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, std::size_t cols, std::span<const Vector> rows);
  static Matrix from_columns(Field f, std::size_t rows, std::span<const Vector> cols);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Scalar &operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Scalar &operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector &v);
  std::vector<Vector> row_list() const;
  std::vector<Vector> column_list() const;

  Vector apply(const Vector &v) const;
  Matrix transpose() const;
  bool is_zero() const noexcept;

  friend Matrix operator*(const Matrix &a, const Matrix &b);
  friend Matrix operator+(const Matrix &a, const Matrix &b);
  friend Matrix operator-(const Matrix &a, const Matrix &b);
  friend bool operator==(const Matrix &a, const Matrix &b);
  friend bool operator!=(const Matrix &a, const Matrix &b) { return !(a == b); }

  /// [a b] side by side.
  static Matrix hstack(const Matrix &a, const Matrix &b);
  /// [a; b] stacked.
  static Matrix vstack(const Matrix &a, const Matrix &b);
  /// diag(a, b).
  static Matrix block_diagonal(const Matrix &a, const Matrix &b);

  std::string to_string() const;

private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by Gauss-Jordan elimination. Row space is
/// preserved; rank = number of nonzero rows.
RrefResult rref(const Matrix &m);
std::size_t rank(const Matrix &m);

/// A linear subspace of F^n stored by its canonical RREF basis, so two
/// subspaces are equal exactly when their basis lists are entry-wise equal.
class Subspace {
public:
  static Subspace zero(Field f, std::size_t ambient);
  static Subspace full(Field f, std::size_t ambient);
  /// Throws DimensionMismatch if a vector has the wrong length.
  static Subspace span(Field f, std::size_t ambient, std::span<const Vector> vectors);

  Field field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector> &basis() const noexcept { return basis_; }
  const std::vector<std::size_t> &pivots() const noexcept { return pivots_; }

  bool contains(const Vector &v) const;
  bool contains(const Subspace &other) const;
  /// Coordinates of v in the RREF basis (the pivot entries of v). Throws
  /// DimensionMismatch when v is not in the subspace.
  Vector coordinates(const Vector &v) const;
  /// v with its pivot coordinates eliminated; zero exactly when v is a member.
  Vector reduce(const Vector &v) const;
  /// ambient_dim x dim matrix whose columns are the basis vectors.
  Matrix inclusion() const;
  /// dim x ambient_dim matrix reading off the pivot entries; a left inverse
  /// of inclusion() and equal to coordinates() on members.
  Matrix coordinate_matrix() const;

  friend bool operator==(const Subspace &a, const Subspace &b);
  friend bool operator!=(const Subspace &a, const Subspace &b) { return !(a == b); }

private:
  Subspace(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}
  Field field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum_subspaces(const Subspace &a, const Subspace &b);
Subspace intersect_subspaces(const Subspace &a, const Subspace &b);
/// Null space of m as a subspace of F^cols.
Subspace kernel(const Matrix &m);
/// Column space of m as a subspace of F^rows.
Subspace image(const Matrix &m);

/// A complement of i spanned by standard basis vectors (the non-pivot
/// coordinates of i's RREF basis) together with the projection onto it.
struct QuotientBasis {
  std::vector<std::size_t> section; // ambient coordinates kept in the quotient
  Matrix project;                   // quotient_dim x ambient_dim, kernel = i

  std::size_t dim() const noexcept { return section.size(); }
  /// ambient_dim x quotient_dim matrix of the chosen representatives.
  Matrix lift() const;
};

QuotientBasis quotient_basis(std::size_t ambient, const Subspace &i);

/// Least subspace containing seed and stable under every map (all maps are
/// square and act on the ambient space of seed).
Subspace invariant_closure(const Subspace &seed, std::span<const Matrix> maps);

/// Solves a x = b; returns false when b is outside the column space.
bool solve(const Matrix &a, const Vector &b, Vector &x);
/// Inverse of a square matrix; returns false if singular.
bool invert(const Matrix &a, Matrix &inv);
/// Some left inverse of a matrix of full column rank; false otherwise.
bool left_inverse(const Matrix &a, Matrix &out);

} // namespace diacat

#endif
