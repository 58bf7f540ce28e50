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

#include "diacat/linalg.hpp"

#include <sstream>

#include "diacat/error.hpp"

namespace diacat {

namespace {

void require_len(std::size_t got, std::size_t want, const char *what) {
  if (got != want)
    fail(Errc::DimensionMismatch, std::string(what) + ": expected length " +
                                      std::to_string(want) + ", got " + std::to_string(got));
}

void require_field(Field a, Field b) {
  if (a != b)
    fail(Errc::FieldMismatch, "field mismatch: " + a.name() + " vs " + b.name());
}

} // namespace

// ---------------------------------------------------------------- Vector

Vector::Vector(Field f, std::vector<Scalar> coords) : field_(f), x_(std::move(coords)) {
  for (const auto &c : x_)
    require_field(c.field(), f);
}

Vector Vector::unit(Field f, std::size_t n, std::size_t i) {
  Vector v(f, n);
  v[i] = Scalar::one(f);
  return v;
}

bool Vector::is_zero() const noexcept {
  for (const auto &c : x_)
    if (!c.is_zero())
      return false;
  return true;
}

std::size_t Vector::leading() const noexcept {
  for (std::size_t i = 0; i < x_.size(); ++i)
    if (!x_[i].is_zero())
      return i;
  return x_.size();
}

Vector &Vector::operator+=(const Vector &o) {
  require_len(o.size(), size(), "vector addition");
  for (std::size_t i = 0; i < x_.size(); ++i)
    if (!o.x_[i].is_zero())
      x_[i] += o.x_[i];
  return *this;
}

Vector &Vector::operator-=(const Vector &o) {
  require_len(o.size(), size(), "vector subtraction");
  for (std::size_t i = 0; i < x_.size(); ++i)
    if (!o.x_[i].is_zero())
      x_[i] -= o.x_[i];
  return *this;
}

Vector &Vector::operator*=(const Scalar &s) {
  for (auto &c : x_)
    if (!c.is_zero())
      c *= s;
  return *this;
}

void Vector::axpy(const Scalar &s, const Vector &o) {
  require_len(o.size(), size(), "axpy");
  if (s.is_zero())
    return;
  for (std::size_t i = 0; i < x_.size(); ++i)
    if (!o.x_[i].is_zero())
      x_[i] += s * o.x_[i];
}

Vector Vector::operator-() const {
  Vector r = *this;
  for (auto &c : r.x_)
    c = -c;
  return r;
}

bool operator==(const Vector &a, const Vector &b) {
  if (a.size() != b.size() || a.field_ != b.field_)
    return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.x_[i] != b.x_[i])
      return false;
  return true;
}

Vector Vector::concat(const Vector &a, const Vector &b) {
  require_field(a.field(), b.field());
  std::vector<Scalar> c(a.x_);
  c.insert(c.end(), b.x_.begin(), b.x_.end());
  return Vector(a.field(), std::move(c));
}

Vector Vector::slice(std::size_t from, std::size_t count) const {
  if (from + count > size())
    fail(Errc::DimensionMismatch, "vector slice out of range");
  return Vector(field_, std::vector<Scalar>(x_.begin() + from, x_.begin() + from + count));
}

std::string Vector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (i)
      s += ", ";
    s += x_[i].to_string();
  }
  return s + ")";
}

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, std::span<const Vector> rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_len(rows[r].size(), cols, "matrix row");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, std::span<const Vector> cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    m.set_column(c, cols[c]);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(field_, std::vector<Scalar>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector &v) {
  require_len(v.size(), rows_, "matrix column");
  require_field(v.field(), field_);
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, c) = v[r];
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    out.push_back(row(r));
  return out;
}

std::vector<Vector> Matrix::column_list() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    out.push_back(column(c));
  return out;
}

Vector Matrix::apply(const Vector &v) const {
  require_len(v.size(), cols_, "matrix-vector product");
  require_field(v.field(), field_);
  Vector out(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero())
      continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar &a = (*this)(r, c);
      if (!a.is_zero())
        out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const noexcept {
  for (const auto &s : a_)
    if (!s.is_zero())
      return false;
  return true;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  require_len(b.rows(), a.cols(), "matrix product");
  require_field(a.field(), b.field());
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar &x = a(i, k);
      if (x.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar &y = b(k, j);
        if (!y.is_zero())
          out(i, j) += x * y;
      }
    }
  return out;
}

Matrix operator+(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(Errc::DimensionMismatch, "matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.a_.size(); ++i)
    out.a_[i] += b.a_[i];
  return out;
}

Matrix operator-(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(Errc::DimensionMismatch, "matrix difference shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.a_.size(); ++i)
    out.a_[i] -= b.a_[i];
  return out;
}

bool operator==(const Matrix &a, const Matrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.field_ != b.field_)
    return false;
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    if (a.a_[i] != b.a_[i])
      return false;
  return true;
}

Matrix Matrix::hstack(const Matrix &a, const Matrix &b) {
  require_len(b.rows(), a.rows(), "hstack");
  Matrix m(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c)
      m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix &a, const Matrix &b) {
  require_len(b.cols(), a.cols(), "vstack");
  Matrix m(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r)
      m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
      m(a.rows() + r, c) = b(r, c);
  }
  return m;
}

Matrix Matrix::block_diagonal(const Matrix &a, const Matrix &b) {
  Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r)
      os << "; ";
    for (std::size_t c = 0; c < cols_; ++c)
      os << (c ? " " : "") << (*this)(r, c).to_string();
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- RREF

namespace {

// In-place Gauss-Jordan on a list of rows; returns pivot columns and drops
// zero rows.
std::vector<std::size_t> reduce_rows(std::vector<Vector> &rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero())
      ++sel;
    if (sel == rows.size())
      continue;
    std::swap(rows[r], rows[sel]);
    Scalar inv = rows[r][c].inverse();
    rows[r] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero())
        continue;
      Scalar factor = -rows[i][c];
      rows[i].axpy(factor, rows[r]);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r, Vector(rows.empty() ? Field::rationals() : rows[0].field(), ncols));
  return pivots;
}

} // namespace

RrefResult rref(const Matrix &m) {
  auto rows = m.row_list();
  auto pivots = reduce_rows(rows, m.cols());
  std::size_t rk = rows.size();
  Matrix out(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < rk; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(r, c) = rows[r][c];
  return RrefResult{std::move(out), rk, std::move(pivots)};
}

std::size_t rank(const Matrix &m) { return rref(m).rank; }

// ---------------------------------------------------------------- Subspace

Subspace Subspace::zero(Field f, std::size_t ambient) { return Subspace(f, ambient); }

Subspace Subspace::full(Field f, std::size_t ambient) {
  Subspace s(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(Vector::unit(f, ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(Field f, std::size_t ambient, std::span<const Vector> vectors) {
  std::vector<Vector> rows;
  rows.reserve(vectors.size());
  for (const auto &v : vectors) {
    require_len(v.size(), ambient, "span");
    require_field(v.field(), f);
    if (!v.is_zero())
      rows.push_back(v);
  }
  Subspace s(f, ambient);
  s.pivots_ = reduce_rows(rows, ambient);
  s.basis_ = std::move(rows);
  return s;
}

Vector Subspace::reduce(const Vector &v) const {
  require_len(v.size(), ambient_, "subspace membership");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar &c = r[pivots_[i]];
    if (!c.is_zero()) {
      Scalar factor = -c;
      r.axpy(factor, basis_[i]);
    }
  }
  return r;
}

bool Subspace::contains(const Vector &v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace &other) const {
  if (other.ambient_ != ambient_)
    fail(Errc::DimensionMismatch, "subspace inclusion across ambient dimensions");
  for (const auto &b : other.basis_)
    if (!contains(b))
      return false;
  return true;
}

Vector Subspace::coordinates(const Vector &v) const {
  if (!contains(v))
    fail(Errc::DimensionMismatch, "vector " + v.to_string() + " is not in the subspace");
  Vector c(field_, basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i)
    c[i] = v[pivots_[i]];
  return c;
}

Matrix Subspace::inclusion() const {
  return Matrix::from_columns(field_, ambient_, basis_);
}

Matrix Subspace::coordinate_matrix() const {
  Matrix m(field_, basis_.size(), ambient_);
  for (std::size_t i = 0; i < pivots_.size(); ++i)
    m(i, pivots_[i]) = Scalar::one(field_);
  return m;
}

bool operator==(const Subspace &a, const Subspace &b) {
  return a.ambient_ == b.ambient_ && a.field_ == b.field_ && a.basis_ == b.basis_;
}

Subspace sum_subspaces(const Subspace &a, const Subspace &b) {
  if (a.ambient_dim() != b.ambient_dim())
    fail(Errc::DimensionMismatch, "sum of subspaces across ambient dimensions");
  require_field(a.field(), b.field());
  std::vector<Vector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.field(), a.ambient_dim(), all);
}

Subspace intersect_subspaces(const Subspace &a, const Subspace &b) {
  if (a.ambient_dim() != b.ambient_dim())
    fail(Errc::DimensionMismatch, "intersection across ambient dimensions");
  // x = A u = B w  <=>  [A -B] (u, w) = 0
  Matrix A = a.inclusion();
  Matrix B = b.inclusion();
  Matrix negB = Matrix::zero(B.field(), B.rows(), B.cols()) - B;
  Subspace k = kernel(Matrix::hstack(A, negB));
  std::vector<Vector> out;
  for (const auto &v : k.basis())
    out.push_back(A.apply(v.slice(0, a.dim())));
  return Subspace::span(a.field(), a.ambient_dim(), out);
}

Subspace kernel(const Matrix &m) {
  auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots)
    is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    Vector v = Vector::unit(m.field(), m.cols(), free);
    for (std::size_t r = 0; r < red.rank; ++r)
      v[red.pivots[r]] = -red.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), m.cols(), basis);
}

Subspace image(const Matrix &m) {
  auto cols = m.column_list();
  return Subspace::span(m.field(), m.rows(), cols);
}

Matrix QuotientBasis::lift() const {
  Matrix l(project.field(), project.cols(), section.size());
  for (std::size_t j = 0; j < section.size(); ++j)
    l(section[j], j) = Scalar::one(project.field());
  return l;
}

QuotientBasis quotient_basis(std::size_t ambient, const Subspace &i) {
  if (i.ambient_dim() != ambient)
    fail(Errc::DimensionMismatch, "quotient_basis: ambient dimension mismatch");
  Field f = i.field();
  std::vector<bool> is_pivot(ambient, false);
  for (auto p : i.pivots())
    is_pivot[p] = true;
  QuotientBasis q{{}, Matrix(f, 0, ambient)};
  for (std::size_t c = 0; c < ambient; ++c)
    if (!is_pivot[c])
      q.section.push_back(c);
  // project(v) = non-pivot coordinates of v - sum_r v[pivot_r] * row_r.
  Matrix p(f, q.section.size(), ambient);
  for (std::size_t j = 0; j < q.section.size(); ++j)
    p(j, q.section[j]) = Scalar::one(f);
  for (std::size_t r = 0; r < i.dim(); ++r) {
    const auto &row = i.basis()[r];
    for (std::size_t j = 0; j < q.section.size(); ++j) {
      const Scalar &x = row[q.section[j]];
      if (!x.is_zero())
        p(j, i.pivots()[r]) -= x;
    }
  }
  q.project = std::move(p);
  return q;
}

Subspace invariant_closure(const Subspace &seed, std::span<const Matrix> maps) {
  Subspace cur = seed;
  std::vector<Vector> frontier = seed.basis();
  while (!frontier.empty()) {
    std::vector<Vector> fresh;
    for (const auto &v : frontier)
      for (const auto &m : maps) {
        Vector w = cur.reduce(m.apply(v));
        if (w.is_zero())
          continue;
        std::vector<Vector> grown = cur.basis();
        grown.push_back(w);
        cur = Subspace::span(cur.field(), cur.ambient_dim(), grown);
        fresh.push_back(std::move(w));
      }
    frontier = std::move(fresh);
  }
  return cur;
}

bool solve(const Matrix &a, const Vector &b, Vector &x) {
  Matrix aug = Matrix::hstack(a, Matrix::from_columns(a.field(), a.rows(), std::span(&b, 1)));
  auto red = rref(aug);
  x = Vector(a.field(), a.cols());
  for (std::size_t r = 0; r < red.rank; ++r) {
    if (red.pivots[r] == a.cols())
      return false;
    x[red.pivots[r]] = red.reduced(r, a.cols());
  }
  return true;
}

bool invert(const Matrix &a, Matrix &inv) {
  if (a.rows() != a.cols())
    return false;
  std::size_t n = a.rows();
  auto red = rref(Matrix::hstack(a, Matrix::identity(a.field(), n)));
  if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1))
    return false;
  inv = Matrix(a.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      inv(r, c) = red.reduced(r, n + c);
  return true;
}

bool left_inverse(const Matrix &a, Matrix &out) {
  std::size_t m = a.rows(), n = a.cols();
  auto red = rref(Matrix::hstack(a, Matrix::identity(a.field(), m)));
  for (std::size_t r = 0; r < n; ++r)
    if (r >= red.rank || red.pivots[r] != r)
      return false;
  out = Matrix(a.field(), n, m);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c)
      out(r, c) = red.reduced(r, n + c);
  return true;
}

} // namespace diacat
