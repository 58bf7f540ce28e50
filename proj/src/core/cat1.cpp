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

#include "diacat/cat1.hpp"

#include "diacat/error.hpp"

namespace diacat {

namespace {

void require_shapes(const Cat1Object &c) {
  std::size_t e = c.E.dim(), d = c.D.dim();
  if (c.E.flavor() != c.D.flavor())
    fail(Errc::FlavorMismatch, "cat1-object with E and D of different flavors");
  if (c.incl.rows() != e || c.incl.cols() != d || c.s.rows() != d || c.s.cols() != e ||
      c.t.rows() != d || c.t.cols() != e)
    fail(Errc::DimensionMismatch, "cat1-object maps have inconsistent shapes");
}

CrossedModule phi_unchecked(const Cat1Object &c) {
  auto l = subalgebra(c.E, kernel(c.s));
  Matrix mu = c.t * l.inclusion;
  Action act = action_by_ambient(c.E, c.incl, c.D, l);
  return CrossedModule::make(std::move(mu), std::move(act));
}

// gamma on all of E (+) E: (a, b) |-> a - sigma t(a) + b.
Matrix full_gamma(const Cat1Object &c) {
  std::size_t e = c.E.dim();
  Matrix left = Matrix::identity(c.E.field(), e) - c.incl * c.t;
  return Matrix::hstack(left, Matrix::identity(c.E.field(), e));
}

} // namespace

Cat1Object Cat1Object::from_subspace(const Algebra &e, const Subspace &d_sub, Matrix s, Matrix t) {
  auto d = subalgebra(e, d_sub);
  return Cat1Object{e, d.algebra, d.inclusion, std::move(s), std::move(t)};
}

Report check_cat1(const Cat1Object &c) {
  require_shapes(c);
  Report rep;
  rep.merge("E", c.E.check());
  rep.merge("D", c.D.check());
  rep.merge("incl", check_morphism(c.D, c.E, c.incl));
  rep.add("incl injective", rank(c.incl) == c.D.dim());
  rep.merge("s", check_morphism(c.E, c.D, c.s));
  rep.merge("t", check_morphism(c.E, c.D, c.t));
  Matrix id = Matrix::identity(c.D.field(), c.D.dim());
  rep.add("s|D = id", c.s * c.incl == id);
  rep.add("t|D = id", c.t * c.incl == id);
  Subspace ks = kernel(c.s), kt = kernel(c.t);
  for (std::size_t op = 0; op < c.E.ops(); ++op) {
    bool st = true, ts = true;
    for (const auto &u : ks.basis())
      for (const auto &v : kt.basis()) {
        if (!c.E.mul(op, u, v).is_zero())
          st = false;
        if (!c.E.mul(op, v, u).is_zero())
          ts = false;
      }
    std::string o = op_symbol(c.flavor(), op);
    rep.add("Ker s " + o + " Ker t = 0", st);
    rep.add("Ker t " + o + " Ker s = 0", ts);
  }
  return rep;
}

CrossedModule phi(const Cat1Object &c) {
  auto rep = check_cat1(c);
  if (!rep.ok())
    fail(Errc::InvalidCat1, "not a cat1-object: " + rep.summary());
  return phi_unchecked(c);
}

Cat1Object to_cat1(const CrossedModule &x) {
  auto sd = semidirect_product(x.action());
  Matrix t = Matrix::hstack(x.mu(), Matrix::identity(x.field(), x.target().dim()));
  return Cat1Object{sd.algebra, x.target(), sd.split, sd.proj, std::move(t)};
}

Report check_cat1_morphism(const Cat1Object &a, const Cat1Object &b, const Matrix &f,
                           const Matrix &g) {
  Report rep;
  rep.merge("f", check_morphism(a.E, b.E, f));
  rep.merge("g", check_morphism(a.D, b.D, g));
  rep.add("f incl = incl' g", f * a.incl == b.incl * g);
  rep.add("s' f = g s", b.s * f == g * a.s);
  rep.add("t' f = g t", b.t * f == g * a.t);
  return rep;
}

bool is_cat1_isomorphism(const Cat1Object &a, const Cat1Object &b, const Matrix &f,
                         const Matrix &g) {
  Matrix inv;
  return check_cat1_morphism(a, b, f, g).ok() && invert(f, inv) && invert(g, inv);
}

Matrix cat1_roundtrip_witness(const Cat1Object &c) {
  Matrix iota = kernel(c.s).inclusion();
  return Matrix::hstack(iota, c.incl);
}

Subalgebra pullback(const Cat1Object &c) {
  Matrix m = Matrix::hstack(c.t, Matrix::zero(c.t.field(), c.s.rows(), c.s.cols()) - c.s);
  return subalgebra(direct_product(c.E, c.E), kernel(m));
}

InternalCategory internal_of_cat1(const Cat1Object &c) {
  auto pb = pullback(c);
  Matrix gamma = full_gamma(c) * pb.inclusion;
  return InternalCategory{c, std::move(pb), std::move(gamma)};
}

InternalCategory to_internal(const CrossedModule &x) { return internal_of_cat1(to_cat1(x)); }

Report check_internal(const InternalCategory &ic) {
  const Cat1Object &c = ic.base;
  Report rep;
  rep.merge("cat1", check_cat1(c));
  const Subalgebra &pb = ic.pullback;
  std::size_t e = c.E.dim();
  Field f = c.E.field();
  rep.merge("gamma", check_morphism(pb.algebra, c.E, ic.gamma));

  Matrix pr1 = Matrix::hstack(Matrix::identity(f, e), Matrix(f, e, e)) * pb.inclusion;
  Matrix pr2 = Matrix::hstack(Matrix(f, e, e), Matrix::identity(f, e)) * pb.inclusion;
  rep.add("s gamma = s pr1", c.s * ic.gamma == c.s * pr1);
  rep.add("t gamma = t pr2", c.t * ic.gamma == c.t * pr2);

  // gamma on a pair of E elements, or nothing if they are not composable
  auto compose = [&](const Vector &a, const Vector &b, Vector &out) {
    Vector ab = Vector::concat(a, b);
    if (!pb.space.contains(ab))
      return false;
    out = ic.gamma.apply(pb.coordinates.apply(ab));
    return true;
  };

  bool units = true;
  for (std::size_t i = 0; i < e && units; ++i) {
    Vector a = c.E.basis(i), r;
    if (!compose(a, ic.sigma().apply(c.t.apply(a)), r) || r != a)
      units = false;
    if (!compose(ic.sigma().apply(c.s.apply(a)), a, r) || r != a)
      units = false;
  }
  rep.add("unit laws", units);

  Matrix tri(f, 2 * c.D.dim(), 3 * e);
  for (std::size_t r = 0; r < c.D.dim(); ++r)
    for (std::size_t k = 0; k < e; ++k) {
      tri(r, k) = c.t(r, k);
      tri(r, e + k) = -c.s(r, k);
      tri(c.D.dim() + r, e + k) = c.t(r, k);
      tri(c.D.dim() + r, 2 * e + k) = -c.s(r, k);
    }
  bool assoc = true;
  Subspace triples = kernel(tri);
  for (const auto &v : triples.basis()) {
    Vector a = v.slice(0, e), b = v.slice(e, e), cc = v.slice(2 * e, e);
    Vector ab, bc, l, r;
    if (!compose(a, b, ab) || !compose(b, cc, bc) || !compose(ab, cc, l) || !compose(a, bc, r) ||
        l != r) {
      assoc = false;
      break;
    }
  }
  rep.add("associativity on composable triples", assoc);

  Subspace ks = kernel(c.s);
  bool kid = true;
  for (const auto &l : ks.basis())
    for (const auto &l2 : ks.basis()) {
      Vector second = ic.sigma().apply(c.t.apply(l)) + l2, r;
      if (!compose(l, second, r) || r != l + l2)
        kid = false;
    }
  rep.add("gamma(l, sigma mu(l) + l') = l + l'", kid);
  return rep;
}

CrossedModule psi(const InternalCategory &ic) {
  auto rep = check_internal(ic);
  if (!rep.ok())
    fail(Errc::InvalidInternalCategory, "not an internal category: " + rep.summary());
  return phi_unchecked(ic.base);
}

} // namespace diacat
