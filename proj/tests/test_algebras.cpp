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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diacat/commands.hpp"
#include "diacat/envelope.hpp"
#include "diacat/error.hpp"
#include "test_util.hpp"

using namespace diacat;
using namespace testutil;

namespace {

// upper triangular 2x2 matrices on e11, e12, e22
Algebra triangular() {
  return Algebra::make(Flavor::Assoc, Q, 3,
                       {tensor(Q, 3, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}})});
}

Algebra dias_bad() {
  return Algebra::unchecked(Flavor::Dias, F2, 1, {tensor(F2, 1, {{0, 0, 0, 1}}), Bilinear(F2, 1)});
}

bool check_has(const Report &r, const std::string &name) {
  for (const auto &c : r.items())
    if (c.name == name)
      return true;
  return false;
}

} // namespace

TEST_CASE("dialgebra axioms") {
  for (std::size_t n : {0, 1, 3})
    CHECK(Algebra::abelian(Flavor::Dias, Q, n).check().ok());
  CHECK(dias_unit().check().ok());
  Report bad = dias_bad().check();
  CHECK_FALSE(bad.ok());
  REQUIRE(bad.first_failure());
  CHECK(bad.first_failure()->name == "(x-|y)-|z = x-|(y|-z)");
  CHECK(bad.first_failure()->detail.find("(0,0,0)") != std::string::npos);
  CHECK(check_has(bad, "(x|-y)-|z = x|-(y-|z)"));
  CHECK_THROWS_AS(Algebra::make(Flavor::Dias, F2, 1, dias_bad().products()), Error);
}

TEST_CASE("Leibniz, associative and Lie axioms") {
  Algebra g = ffe();
  CHECK(check_leibniz(g.product()).ok());
  CHECK_FALSE(check_lie(g.product()).ok());
  Bilinear zero(Q, 3);
  CHECK(check_leibniz(zero).ok());
  CHECK(check_associative(zero).ok());
  CHECK(check_lie(zero).ok());
  CHECK(check_associative(as_xxy(Q).product()).ok());
  // (x*x)*x = x*(x*x) fails once x*y = x
  CHECK_FALSE(check_associative(tensor(Q, 2, {{0, 0, 1, 1}, {0, 1, 0, 1}})).ok());
}

TEST_CASE("annihilator") {
  CHECK(annihilator(Algebra::abelian(Flavor::Dias, Q, 3)) == Subspace::full(Q, 3));
  CHECK(annihilator(dias_unit()).dim() == 0);
  Algebra fd = free_dialgebra(F2, 1, 2);
  Subspace ann = annihilator(fd);
  CHECK(ann.contains(fd.basis(1)));
  CHECK(ann.contains(fd.basis(2)));
  CHECK_FALSE(ann.contains(fd.basis(0)));
  for (const auto &v : ann.basis())
    for (std::size_t b = 0; b < fd.dim(); ++b)
      for (std::size_t op = 0; op < 2; ++op) {
        CHECK(fd.mul(op, v, fd.basis(b)).is_zero());
        CHECK(fd.mul(op, fd.basis(b), v).is_zero());
      }
}

TEST_CASE("ideal closure") {
  Algebra d = dias_of_as(as_xxy(Q));
  CHECK(ideal_closure(d, Subspace::zero(Q, 2)).dim() == 0);
  CHECK(ideal_closure(d, Subspace::full(Q, 2)) == Subspace::full(Q, 2));
  Subspace x = span(Q, 2, {{1, 0}});
  Subspace cl = ideal_closure(d, x);
  CHECK(cl == Subspace::full(Q, 2));
  CHECK(ideal_closure(d, cl) == cl);
  Subspace y = span(Q, 2, {{0, 1}});
  CHECK(ideal_closure(d, y) == y);
  CHECK(ideal_closure(d, x).contains(ideal_closure(d, y)));
  CHECK(is_ideal(d, y));
  CHECK_FALSE(is_ideal(d, x));
}

TEST_CASE("quotients") {
  Algebra g = ffe();
  auto q0 = quotient_algebra(g, Subspace::zero(F2, 2));
  CHECK(q0.algebra == g);
  CHECK(q0.projection == Matrix::identity(F2, 2));
  auto qf = quotient_algebra(g, Subspace::full(F2, 2));
  CHECK(qf.algebra.dim() == 0);
  auto qe = quotient_algebra(g, span(F2, 2, {{1, 0}}));
  CHECK(qe.algebra.dim() == 1);
  CHECK(qe.algebra.flavor() == Flavor::Leibniz);
  CHECK(qe.algebra.is_abelian());
  CHECK(is_morphism(g, qe.algebra, qe.projection));
  CHECK(rank(qe.projection) == 1);
  CHECK(kernel(qe.projection) == span(F2, 2, {{1, 0}}));
  CHECK_THROWS_AS(quotient_algebra(g, span(F2, 2, {{0, 1}})), Error);
}

TEST_CASE("Leibnization") {
  CHECK(lb(Algebra::abelian(Flavor::Dias, Q, 2)).is_abelian());
  Algebra u = lb(dias_unit());
  CHECK(u.flavor() == Flavor::Leibniz);
  CHECK(u.is_abelian());
  Algebra t = lb(dias_of_as(triangular()));
  CHECK(check_lie(t.product()).ok());
  CHECK_FALSE(t.is_abelian());
  // [e11, e12] = e12 - 0
  CHECK(t.mul(0, t.basis(0), t.basis(1)) == t.basis(1));
}

TEST_CASE("Leibnization of every small dialgebra over F2") {
  for (std::size_t n : {1, 2})
    for (const auto &d : all_f2_dialgebras(n))
      CHECK(lb(d).check().ok());
}

TEST_CASE("AS") {
  Algebra a = triangular();
  auto q = as_functor(dias_of_as(a));
  CHECK(q.algebra == a);
  CHECK(q.projection == Matrix::identity(Q, 3));
  auto ab = as_functor(Algebra::abelian(Flavor::Dias, Q, 2));
  CHECK(ab.algebra == Algebra::abelian(Flavor::Assoc, Q, 2));
  auto fr = as_functor(free_dialgebra(F2, 1, 2));
  CHECK(fr.algebra.dim() == 2);
  CHECK(fr.algebra.check().ok());
}

TEST_CASE("associative algebras as dialgebras") {
  Algebra z = dias_of_as(Algebra::abelian(Flavor::Assoc, F2, 0));
  CHECK(z.dim() == 0);
  CHECK(z.flavor() == Flavor::Dias);
  Algebra d = dias_of_as(as_xxy(Q));
  CHECK(d.product(0) == d.product(1));
  CHECK(d.check().ok());
  CHECK(as_functor(d).algebra == as_xxy(Q));
}

TEST_CASE("Lie functors") {
  CHECK(liea(as_xxy(Q)).is_abelian());
  CHECK(liea(as_xxy(Q)).flavor() == Flavor::Lie);
  Algebra a = triangular();
  CHECK(liea(a) == liel(lb(dias_of_as(a))).algebra);
  Algebra heis = Algebra::make(Flavor::Lie, Q, 3, {tensor(Q, 3, {{0, 1, 2, 1}, {1, 0, 2, -1}})});
  auto back = liel(lb_of_lie(heis));
  CHECK(back.algebra == heis);
  CHECK(back.projection == Matrix::identity(Q, 3));
  auto l = liel(ffe());
  CHECK(l.algebra.dim() == 1);
  CHECK(l.algebra.is_abelian());
  CHECK(l.algebra.flavor() == Flavor::Lie);
  CHECK(liel(Algebra::abelian(Flavor::Leibniz, F2, 2)).algebra ==
        Algebra::abelian(Flavor::Lie, F2, 2));
}

TEST_CASE("polarized squares enter the Liezation ideal") {
  // [a,b] = c = [b,a]: every basis square vanishes but [a+b,a+b] = 2c
  Field f3 = Field::prime(3);
  Algebra g = Algebra::make(Flavor::Leibniz, f3, 3, {tensor(f3, 3, {{0, 1, 2, 1}, {1, 0, 2, 1}})});
  CHECK(liel(g).algebra.dim() == 2);
}

TEST_CASE("morphisms") {
  Algebra g = ffe();
  CHECK(is_morphism(g, g, Matrix::identity(F2, 2)));
  Algebra zero = Algebra::abelian(Flavor::Leibniz, F2, 0);
  CHECK(is_morphism(g, zero, Matrix(F2, 0, 2)));
  Algebra ab1 = Algebra::abelian(Flavor::Leibniz, F2, 1);
  CHECK(is_morphism(g, ab1, mat(F2, {{0, 1}})));
  CHECK_FALSE(is_morphism(g, g, mat(F2, {{0, 1}, {1, 0}})));
  CHECK_THROWS_AS(AlgebraMorphism::make(g, g, mat(F2, {{0, 1}, {1, 0}})), Error);
}

TEST_CASE("nilpotency") {
  Algebra fd = free_dialgebra(F2, 1, 2);
  CHECK(is_nilpotent(fd, 2));
  CHECK_FALSE(is_nilpotent(fd, 1));
  CHECK_FALSE(is_nilpotent(dias_unit(), 5));
}
