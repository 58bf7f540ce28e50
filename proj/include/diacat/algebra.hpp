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
// Finite-dimensional algebras given by structure constants: dialgebras,
// Leibniz, associative and Lie algebras.

#ifndef DIACAT_ALGEBRA_HPP
#define DIACAT_ALGEBRA_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "diacat/linalg.hpp"
#include "diacat/report.hpp"

namespace diacat {

enum class Flavor { Dias, Leibniz, Assoc, Lie };

/// "dias", "lb", "as", "lie".
const char *flavor_name(Flavor f);
Flavor parse_flavor(std::string_view name);
/// Number of products: two for dialgebras (left, right), one otherwise.
std::size_t op_count(Flavor f);
/// ASCII symbol of a product, used in reports: "-|", "|-", "[,]", "*".
const char *op_symbol(Flavor f, std::size_t op);

/// A bilinear map U x V -> W stored as the images of basis pairs.
class Bilinear {
public:
  Bilinear(Field f, std::size_t left, std::size_t right, std::size_t out);
  /// Square n x n -> n tensor.
  Bilinear(Field f, std::size_t n) : Bilinear(f, n, n, n) {}

  Field field() const noexcept { return field_; }
  std::size_t left_dim() const noexcept { return l_; }
  std::size_t right_dim() const noexcept { return r_; }
  std::size_t out_dim() const noexcept { return o_; }

  const Vector &at(std::size_t i, std::size_t j) const { return c_[i * r_ + j]; }
  Vector &at(std::size_t i, std::size_t j) { return c_[i * r_ + j]; }

  Vector apply(const Vector &u, const Vector &v) const;
  /// v |-> u*v as an out x right matrix.
  Matrix left_mult(const Vector &u) const;
  /// u |-> u*v as an out x left matrix.
  Matrix right_mult(const Vector &v) const;

  bool is_zero() const noexcept;
  /// (v, u) |-> this(u, v).
  Bilinear swapped() const;
  /// (x, y) |-> out_map(this(left_in x, right_in y)).
  Bilinear transformed(const Matrix &out_map, const Matrix &left_in, const Matrix &right_in) const;

  Bilinear operator-() const;
  friend Bilinear operator+(const Bilinear &a, const Bilinear &b);
  friend Bilinear operator-(const Bilinear &a, const Bilinear &b);
  friend bool operator==(const Bilinear &a, const Bilinear &b);
  friend bool operator!=(const Bilinear &a, const Bilinear &b) { return !(a == b); }

private:
  Field field_;
  std::size_t l_, r_, o_;
  std::vector<Vector> c_;
};

/// Flavor axioms checked on every basis triple (and basis pair for the Lie
/// alternation). One entry per axiom: PASS or the first violating triple.
Report check_axioms(Flavor f, std::size_t dim, const std::vector<Bilinear> &products);
Report check_dialgebra(const Bilinear &left, const Bilinear &right);
Report check_leibniz(const Bilinear &bracket);
Report check_associative(const Bilinear &product);
Report check_lie(const Bilinear &bracket);

/// Immutable algebra value. Copies share the underlying data.
class Algebra {
public:
  /// Verifies the flavor axioms; throws Errc::AxiomViolation.
  static Algebra make(Flavor f, Field k, std::size_t dim, std::vector<Bilinear> products,
                      std::vector<std::string> labels = {});
  /// Skips verification; certified() is false until certify() is called.
  static Algebra unchecked(Flavor f, Field k, std::size_t dim, std::vector<Bilinear> products,
                           std::vector<std::string> labels = {});
  /// All products zero.
  static Algebra abelian(Flavor f, Field k, std::size_t dim);

  Flavor flavor() const noexcept { return d_->flavor; }
  Field field() const noexcept { return d_->field; }
  std::size_t dim() const noexcept { return d_->dim; }
  std::size_t ops() const noexcept { return d_->products.size(); }
  const Bilinear &product(std::size_t op = 0) const { return d_->products.at(op); }
  const std::vector<Bilinear> &products() const noexcept { return d_->products; }
  const std::vector<std::string> &labels() const noexcept { return d_->labels; }
  bool certified() const noexcept { return d_->certified; }

  Vector mul(std::size_t op, const Vector &u, const Vector &v) const {
    return d_->products[op].apply(u, v);
  }
  Vector basis(std::size_t i) const { return Vector::unit(field(), dim(), i); }
  Vector zero_vector() const { return Vector(field(), dim()); }

  Report check() const { return check_axioms(flavor(), dim(), products()); }
  /// Returns a certified copy or throws Errc::AxiomViolation.
  Algebra certify() const;
  /// Same data under another flavor tag, re-verified.
  Algebra retag(Flavor f) const;
  bool is_abelian() const noexcept;

  /// Tensor equality: flavor, field, dimension and structure constants.
  friend bool operator==(const Algebra &a, const Algebra &b);
  friend bool operator!=(const Algebra &a, const Algebra &b) { return !(a == b); }

private:
  struct Data {
    Flavor flavor;
    Field field;
    std::size_t dim;
    std::vector<Bilinear> products;
    std::vector<std::string> labels;
    bool certified;
  };
  explicit Algebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// Throws AxiomViolation unless a passes its flavor check.
const Algebra &require_valid(const Algebra &a, const char *what);
void require_flavor(const Algebra &a, Flavor f, const char *what);

/// f(b_i o b_j) = f(b_i) o f(b_j) for every product of the flavor.
Report check_morphism(const Algebra &source, const Algebra &target, const Matrix &m);
bool is_morphism(const Algebra &source, const Algebra &target, const Matrix &m);

struct AlgebraMorphism {
  Algebra source, target;
  Matrix matrix; // target.dim x source.dim

  /// Throws Errc::NotAMorphism.
  static AlgebraMorphism make(Algebra source, Algebra target, Matrix m);
  static AlgebraMorphism identity(const Algebra &a);
  static AlgebraMorphism zero(const Algebra &source, const Algebra &target);
  AlgebraMorphism then(const AlgebraMorphism &g) const; // g o this
};

/// Maps v |-> b o v and v |-> v o b for all basis b and products.
std::vector<Matrix> multiplication_maps(const Algebra &a);

Subspace annihilator(const Algebra &a);
Subspace ideal_closure(const Algebra &a, const Subspace &seed);
bool is_ideal(const Algebra &a, const Subspace &s);
bool is_subalgebra(const Algebra &a, const Subspace &s);

struct QuotientAlgebra {
  Algebra algebra;
  QuotientBasis basis;
  Matrix projection; // quotient_dim x dim, kernel = ideal
  Matrix lift() const { return basis.lift(); }
};

/// Throws Errc::NotAnIdeal when i is not closed.
QuotientAlgebra quotient_algebra(const Algebra &a, const Subspace &i);

struct Subalgebra {
  Algebra algebra;
  Subspace space;
  Matrix inclusion;   // dim(a) x dim(sub)
  Matrix coordinates; // dim(sub) x dim(a), valid on members
};

/// Throws Errc::NotAnIdeal (closure failure) if s is not a subalgebra.
Subalgebra subalgebra(const Algebra &a, const Subspace &s);

/// Leibnization [x,y] = x -| y - y |- x.
Algebra lb(const Algebra &d);
/// Quotient by the ideal generated by x -| y - x |- y, as an associative algebra.
QuotientAlgebra as_functor(const Algebra &d);
Algebra dias_of_as(const Algebra &a);
/// Commutator Lie algebra.
Algebra liea(const Algebra &a);
/// Quotient by the ideal generated by all [g,g] (polarized), as a Lie algebra.
QuotientAlgebra liel(const Algebra &g);
Algebra lb_of_lie(const Algebra &p);

/// Product structure on a (+) b, coordinates of a first.
Algebra direct_product(const Algebra &a, const Algebra &b);

/// Span of all products of n basis elements under every bracketing.
std::vector<Subspace> product_powers(const Algebra &a, std::size_t up_to);
/// True when every product of N+1 elements vanishes.
bool is_nilpotent(const Algebra &a, std::size_t n);

std::string describe(const Algebra &a);

} // namespace diacat

#endif
