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

#include "diacat/algebra.hpp"

#include <sstream>

#include "diacat/error.hpp"
#include "identities.hpp"

namespace diacat {

const char *flavor_name(Flavor f) {
  switch (f) {
  case Flavor::Dias: return "dias";
  case Flavor::Leibniz: return "lb";
  case Flavor::Assoc: return "as";
  case Flavor::Lie: return "lie";
  }
  return "?";
}

Flavor parse_flavor(std::string_view name) {
  if (name == "dias") return Flavor::Dias;
  if (name == "lb") return Flavor::Leibniz;
  if (name == "as") return Flavor::Assoc;
  if (name == "lie") return Flavor::Lie;
  fail(Errc::ParseError, "unknown flavor \"" + std::string(name) + "\"");
}

std::size_t op_count(Flavor f) { return f == Flavor::Dias ? 2 : 1; }

const char *op_symbol(Flavor f, std::size_t op) {
  switch (f) {
  case Flavor::Dias: return op == 0 ? "-|" : "|-";
  case Flavor::Leibniz:
  case Flavor::Lie: return "[,]";
  case Flavor::Assoc: return "*";
  }
  return "?";
}

// ---------------------------------------------------------------- Bilinear

Bilinear::Bilinear(Field f, std::size_t left, std::size_t right, std::size_t out)
    : field_(f), l_(left), r_(right), o_(out), c_(left * right, Vector(f, out)) {}

Vector Bilinear::apply(const Vector &u, const Vector &v) const {
  if (u.size() != l_ || v.size() != r_)
    fail(Errc::DimensionMismatch, "bilinear map applied to vectors of the wrong length");
  Vector out(field_, o_);
  for (std::size_t i = 0; i < l_; ++i) {
    if (u[i].is_zero())
      continue;
    for (std::size_t j = 0; j < r_; ++j) {
      if (v[j].is_zero())
        continue;
      const Vector &c = at(i, j);
      if (!c.is_zero())
        out.axpy(u[i] * v[j], c);
    }
  }
  return out;
}

Matrix Bilinear::left_mult(const Vector &u) const {
  Matrix m(field_, o_, r_);
  for (std::size_t j = 0; j < r_; ++j)
    m.set_column(j, apply(u, Vector::unit(field_, r_, j)));
  return m;
}

Matrix Bilinear::right_mult(const Vector &v) const {
  Matrix m(field_, o_, l_);
  for (std::size_t i = 0; i < l_; ++i)
    m.set_column(i, apply(Vector::unit(field_, l_, i), v));
  return m;
}

bool Bilinear::is_zero() const noexcept {
  for (const auto &v : c_)
    if (!v.is_zero())
      return false;
  return true;
}

Bilinear Bilinear::swapped() const {
  Bilinear s(field_, r_, l_, o_);
  for (std::size_t i = 0; i < l_; ++i)
    for (std::size_t j = 0; j < r_; ++j)
      s.at(j, i) = at(i, j);
  return s;
}

Bilinear Bilinear::transformed(const Matrix &out_map, const Matrix &left_in,
                               const Matrix &right_in) const {
  if (out_map.cols() != o_ || left_in.rows() != l_ || right_in.rows() != r_)
    fail(Errc::DimensionMismatch, "Bilinear::transformed shape mismatch");
  Bilinear t(field_, left_in.cols(), right_in.cols(), out_map.rows());
  auto lc = left_in.column_list();
  auto rc = right_in.column_list();
  for (std::size_t i = 0; i < lc.size(); ++i)
    for (std::size_t j = 0; j < rc.size(); ++j)
      t.at(i, j) = out_map.apply(apply(lc[i], rc[j]));
  return t;
}

Bilinear Bilinear::operator-() const {
  Bilinear n = *this;
  for (auto &v : n.c_)
    v = -v;
  return n;
}

Bilinear operator+(const Bilinear &a, const Bilinear &b) {
  if (a.l_ != b.l_ || a.r_ != b.r_ || a.o_ != b.o_)
    fail(Errc::DimensionMismatch, "sum of bilinear maps of different shapes");
  Bilinear s = a;
  for (std::size_t i = 0; i < s.c_.size(); ++i)
    s.c_[i] += b.c_[i];
  return s;
}

Bilinear operator-(const Bilinear &a, const Bilinear &b) { return a + (-b); }

bool operator==(const Bilinear &a, const Bilinear &b) {
  return a.field_ == b.field_ && a.l_ == b.l_ && a.r_ == b.r_ && a.o_ == b.o_ && a.c_ == b.c_;
}

// ---------------------------------------------------------------- checks

namespace {

void require_square(const Bilinear &b, std::size_t n, const char *what) {
  if (b.left_dim() != n || b.right_dim() != n || b.out_dim() != n)
    fail(Errc::DimensionMismatch, std::string(what) + ": product tensor is not " +
                                      std::to_string(n) + "x" + std::to_string(n) + "->" +
                                      std::to_string(n));
}

} // namespace

Report check_axioms(Flavor f, std::size_t dim, const std::vector<Bilinear> &products) {
  if (products.size() != op_count(f))
    fail(Errc::DimensionMismatch, std::string("flavor ") + flavor_name(f) + " needs " +
                                      std::to_string(op_count(f)) + " product tensors");
  for (const auto &p : products)
    require_square(p, dim, "check_axioms");
  Report rep;
  const auto &ids = identities(f);
  for (std::size_t a = 0; a < ids.size(); ++a) {
    bool ok = true;
    std::string detail;
    std::size_t arity = ids[a].arity;
    std::size_t jmax = arity >= 2 ? dim : 1;
    std::size_t kmax = arity == 3 ? dim : 1;
    for (std::size_t i = 0; i < dim && ok; ++i)
      for (std::size_t j = 0; j < jmax && ok; ++j)
        for (std::size_t k = 0; k < kmax && ok; ++k) {
          auto v = eval_identity(ids[a], products, i, j, k);
          if (!v.holds()) {
            ok = false;
            std::ostringstream os;
            os << "basis " << (arity == 3 ? "triple (" : arity == 2 ? "pair (" : "element (") << i;
            if (arity >= 2)
              os << "," << j;
            if (arity == 3)
              os << "," << k;
            os << "): lhs " << v.lhs.to_string() << " rhs " << v.rhs.to_string();
            detail = os.str();
          }
        }
    rep.add(ids[a].name, ok, detail);
  }
  return rep;
}

Report check_dialgebra(const Bilinear &left, const Bilinear &right) {
  return check_axioms(Flavor::Dias, left.left_dim(), {left, right});
}
Report check_leibniz(const Bilinear &b) { return check_axioms(Flavor::Leibniz, b.left_dim(), {b}); }
Report check_associative(const Bilinear &b) {
  return check_axioms(Flavor::Assoc, b.left_dim(), {b});
}
Report check_lie(const Bilinear &b) { return check_axioms(Flavor::Lie, b.left_dim(), {b}); }

// ---------------------------------------------------------------- Algebra

Algebra Algebra::unchecked(Flavor f, Field k, std::size_t dim, std::vector<Bilinear> products,
                           std::vector<std::string> labels) {
  if (products.size() != op_count(f))
    fail(Errc::DimensionMismatch, std::string("flavor ") + flavor_name(f) + " needs " +
                                      std::to_string(op_count(f)) + " product tensors");
  for (const auto &p : products) {
    require_square(p, dim, "Algebra");
    if (p.field() != k)
      fail(Errc::FieldMismatch, "product tensor over " + p.field().name() + ", algebra over " +
                                    k.name());
  }
  if (labels.empty())
    for (std::size_t i = 0; i < dim; ++i)
      labels.push_back("b" + std::to_string(i));
  if (labels.size() != dim)
    fail(Errc::DimensionMismatch, "basis label count differs from dimension");
  return Algebra(std::make_shared<const Data>(
      Data{f, k, dim, std::move(products), std::move(labels), false}));
}

Algebra Algebra::make(Flavor f, Field k, std::size_t dim, std::vector<Bilinear> products,
                      std::vector<std::string> labels) {
  return unchecked(f, k, dim, std::move(products), std::move(labels)).certify();
}

Algebra Algebra::abelian(Flavor f, Field k, std::size_t dim) {
  std::vector<Bilinear> ps(op_count(f), Bilinear(k, dim));
  auto a = unchecked(f, k, dim, std::move(ps));
  auto d = std::make_shared<Data>(*a.d_);
  d->certified = true;
  return Algebra(std::move(d));
}

Algebra Algebra::certify() const {
  if (certified())
    return *this;
  auto rep = check();
  if (!rep.ok())
    fail(Errc::AxiomViolation, std::string(flavor_name(flavor())) + " axiom fails: " +
                                   rep.summary());
  auto d = std::make_shared<Data>(*d_);
  d->certified = true;
  return Algebra(std::move(d));
}

Algebra Algebra::retag(Flavor f) const {
  if (op_count(f) != ops())
    fail(Errc::FlavorMismatch, std::string("cannot retag ") + flavor_name(flavor()) + " as " +
                                   flavor_name(f));
  return make(f, field(), dim(), products(), labels());
}

bool Algebra::is_abelian() const noexcept {
  for (const auto &p : products())
    if (!p.is_zero())
      return false;
  return true;
}

bool operator==(const Algebra &a, const Algebra &b) {
  return a.flavor() == b.flavor() && a.field() == b.field() && a.dim() == b.dim() &&
         a.products() == b.products();
}

const Algebra &require_valid(const Algebra &a, const char *what) {
  if (!a.certified()) {
    auto rep = a.check();
    if (!rep.ok())
      fail(Errc::AxiomViolation, std::string(what) + ": input is not a valid " +
                                     flavor_name(a.flavor()) + " algebra (" + rep.summary() +
                                     ")");
  }
  return a;
}

void require_flavor(const Algebra &a, Flavor f, const char *what) {
  if (a.flavor() != f)
    fail(Errc::FlavorMismatch, std::string(what) + ": expected a " + flavor_name(f) +
                                   " algebra, got " + flavor_name(a.flavor()));
}

// ---------------------------------------------------------------- morphisms

Report check_morphism(const Algebra &s, const Algebra &t, const Matrix &m) {
  if (s.flavor() != t.flavor())
    fail(Errc::FlavorMismatch, "morphism between algebras of different flavors");
  if (m.rows() != t.dim() || m.cols() != s.dim())
    fail(Errc::DimensionMismatch, "morphism matrix has shape " + std::to_string(m.rows()) +
                                      "x" + std::to_string(m.cols()) + ", expected " +
                                      std::to_string(t.dim()) + "x" + std::to_string(s.dim()));
  Report rep;
  auto cols = m.column_list();
  for (std::size_t op = 0; op < s.ops(); ++op) {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < s.dim() && ok; ++i)
      for (std::size_t j = 0; j < s.dim() && ok; ++j) {
        Vector lhs = m.apply(s.product(op).at(i, j));
        Vector rhs = t.mul(op, cols[i], cols[j]);
        if (lhs != rhs) {
          ok = false;
          detail = "pair (" + std::to_string(i) + "," + std::to_string(j) + "): f(x o y) = " +
                   lhs.to_string() + ", f(x) o f(y) = " + rhs.to_string();
        }
      }
    rep.add(std::string("preserves ") + op_symbol(s.flavor(), op), ok, detail);
  }
  return rep;
}

bool is_morphism(const Algebra &s, const Algebra &t, const Matrix &m) {
  return check_morphism(s, t, m).ok();
}

AlgebraMorphism AlgebraMorphism::make(Algebra source, Algebra target, Matrix m) {
  auto rep = check_morphism(source, target, m);
  if (!rep.ok())
    fail(Errc::NotAMorphism, "not an algebra morphism: " + rep.summary());
  return AlgebraMorphism{std::move(source), std::move(target), std::move(m)};
}

AlgebraMorphism AlgebraMorphism::identity(const Algebra &a) {
  return AlgebraMorphism{a, a, Matrix::identity(a.field(), a.dim())};
}

AlgebraMorphism AlgebraMorphism::zero(const Algebra &s, const Algebra &t) {
  return AlgebraMorphism{s, t, Matrix(s.field(), t.dim(), s.dim())};
}

AlgebraMorphism AlgebraMorphism::then(const AlgebraMorphism &g) const {
  return AlgebraMorphism{source, g.target, g.matrix * matrix};
}

// ---------------------------------------------------------------- ideals

std::vector<Matrix> multiplication_maps(const Algebra &a) {
  std::vector<Matrix> maps;
  for (std::size_t op = 0; op < a.ops(); ++op) {
    if (a.product(op).is_zero())
      continue;
    for (std::size_t k = 0; k < a.dim(); ++k) {
      maps.push_back(a.product(op).left_mult(a.basis(k)));
      maps.push_back(a.product(op).right_mult(a.basis(k)));
    }
  }
  return maps;
}

Subspace annihilator(const Algebra &a) {
  Matrix stacked(a.field(), 0, a.dim());
  for (const auto &m : multiplication_maps(a))
    stacked = Matrix::vstack(stacked, m);
  return kernel(stacked);
}

Subspace ideal_closure(const Algebra &a, const Subspace &seed) {
  if (seed.ambient_dim() != a.dim())
    fail(Errc::DimensionMismatch, "ideal seed lives in the wrong ambient space");
  auto maps = multiplication_maps(a);
  return invariant_closure(seed, maps);
}

bool is_ideal(const Algebra &a, const Subspace &s) { return ideal_closure(a, s) == s; }

bool is_subalgebra(const Algebra &a, const Subspace &s) {
  for (std::size_t op = 0; op < a.ops(); ++op)
    for (const auto &u : s.basis())
      for (const auto &v : s.basis())
        if (!s.contains(a.mul(op, u, v)))
          return false;
  return true;
}

QuotientAlgebra quotient_algebra(const Algebra &a, const Subspace &i) {
  if (!is_ideal(a, i))
    fail(Errc::NotAnIdeal, "subspace of dimension " + std::to_string(i.dim()) +
                               " is not an ideal of the " + flavor_name(a.flavor()) + " algebra");
  auto q = quotient_basis(a.dim(), i);
  Matrix lift = q.lift();
  std::vector<Bilinear> ps;
  for (const auto &p : a.products())
    ps.push_back(p.transformed(q.project, lift, lift));
  std::vector<std::string> labels;
  for (auto s : q.section)
    labels.push_back(a.labels()[s]);
  auto alg = Algebra::make(a.flavor(), a.field(), q.dim(), std::move(ps), std::move(labels));
  Matrix proj = q.project;
  return QuotientAlgebra{std::move(alg), std::move(q), std::move(proj)};
}

Subalgebra subalgebra(const Algebra &a, const Subspace &s) {
  if (!is_subalgebra(a, s))
    fail(Errc::NotAnIdeal, "subspace is not closed under the products");
  Matrix inc = s.inclusion();
  Matrix coords = s.coordinate_matrix();
  std::vector<Bilinear> ps;
  for (const auto &p : a.products())
    ps.push_back(p.transformed(coords, inc, inc));
  auto alg = Algebra::make(a.flavor(), a.field(), s.dim(), std::move(ps));
  return Subalgebra{std::move(alg), s, std::move(inc), std::move(coords)};
}

// ---------------------------------------------------------------- functors

Algebra lb(const Algebra &d) {
  require_flavor(d, Flavor::Dias, "LB");
  require_valid(d, "LB");
  Bilinear br = d.product(0) - d.product(1).swapped();
  return Algebra::make(Flavor::Leibniz, d.field(), d.dim(), {std::move(br)}, d.labels());
}

QuotientAlgebra as_functor(const Algebra &d) {
  require_flavor(d, Flavor::Dias, "AS");
  require_valid(d, "AS");
  std::vector<Vector> seed;
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j)
      seed.push_back(d.product(0).at(i, j) - d.product(1).at(i, j));
  auto ideal = ideal_closure(d, Subspace::span(d.field(), d.dim(), seed));
  auto q = quotient_algebra(d, ideal);
  q.algebra = Algebra::make(Flavor::Assoc, d.field(), q.algebra.dim(), {q.algebra.product(0)},
                            q.algebra.labels());
  return q;
}

Algebra dias_of_as(const Algebra &a) {
  require_flavor(a, Flavor::Assoc, "dias_of_as");
  require_valid(a, "dias_of_as");
  return Algebra::make(Flavor::Dias, a.field(), a.dim(), {a.product(), a.product()}, a.labels());
}

Algebra liea(const Algebra &a) {
  require_flavor(a, Flavor::Assoc, "Liea");
  require_valid(a, "Liea");
  return Algebra::make(Flavor::Lie, a.field(), a.dim(), {a.product() - a.product().swapped()},
                       a.labels());
}

QuotientAlgebra liel(const Algebra &g) {
  require_flavor(g, Flavor::Leibniz, "Liel");
  require_valid(g, "Liel");
  std::vector<Vector> seed;
  const auto &b = g.product();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    seed.push_back(b.at(i, i));
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      seed.push_back(b.at(i, j) + b.at(j, i));
  }
  auto ideal = ideal_closure(g, Subspace::span(g.field(), g.dim(), seed));
  auto q = quotient_algebra(g, ideal);
  q.algebra = Algebra::make(Flavor::Lie, g.field(), q.algebra.dim(), {q.algebra.product()},
                            q.algebra.labels());
  return q;
}

Algebra lb_of_lie(const Algebra &p) {
  require_flavor(p, Flavor::Lie, "lb_of_lie");
  return p.retag(Flavor::Leibniz);
}

Algebra direct_product(const Algebra &a, const Algebra &b) {
  if (a.flavor() != b.flavor() || a.field() != b.field())
    fail(Errc::FlavorMismatch, "direct product of incompatible algebras");
  std::size_t n = a.dim() + b.dim();
  Matrix ia(a.field(), n, a.dim()), ib(a.field(), n, b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    ia(i, i) = Scalar::one(a.field());
  for (std::size_t i = 0; i < b.dim(); ++i)
    ib(a.dim() + i, i) = Scalar::one(a.field());
  std::vector<Bilinear> ps;
  for (std::size_t op = 0; op < a.ops(); ++op) {
    Bilinear p(a.field(), n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        p.at(i, j) = ia.apply(a.product(op).at(i, j));
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j)
        p.at(a.dim() + i, a.dim() + j) = ib.apply(b.product(op).at(i, j));
    ps.push_back(std::move(p));
  }
  auto labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return Algebra::make(a.flavor(), a.field(), n, std::move(ps), std::move(labels));
}

std::vector<Subspace> product_powers(const Algebra &a, std::size_t up_to) {
  // P[1] = A, P[k] = sum over i+j=k of P[i] o P[j] (both orders, all products)
  std::vector<Subspace> p;
  p.push_back(Subspace::zero(a.field(), a.dim()));
  p.push_back(Subspace::full(a.field(), a.dim()));
  for (std::size_t k = 2; k <= up_to; ++k) {
    std::vector<Vector> gens;
    for (std::size_t i = 1; i < k; ++i)
      for (std::size_t op = 0; op < a.ops(); ++op)
        for (const auto &u : p[i].basis())
          for (const auto &v : p[k - i].basis()) {
            auto w = a.mul(op, u, v);
            if (!w.is_zero())
              gens.push_back(std::move(w));
          }
    p.push_back(Subspace::span(a.field(), a.dim(), gens));
  }
  return p;
}

bool is_nilpotent(const Algebra &a, std::size_t n) {
  return product_powers(a, n + 1)[n + 1].dim() == 0;
}

std::string describe(const Algebra &a) {
  std::ostringstream os;
  os << flavor_name(a.flavor()) << " algebra over " << a.field().name() << ", dim " << a.dim();
  return os.str();
}

} // namespace diacat
