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

#include "diacat/envelope.hpp"
#include "diacat/error.hpp"
#include "diacat/fixtures.hpp"
#include "diacat/functors.hpp"
#include "test_util.hpp"

using namespace diacat;
using namespace testutil;

namespace {

CrossedModule ideal_inclusion(const Algebra &d, const Subspace &s) {
  Subalgebra sub = subalgebra(d, s);
  return CrossedModule::make(sub.inclusion,
                             action_by_ambient(d, Matrix::identity(d.field(), d.dim()), d, sub));
}

Algebra heis() {
  return Algebra::make(Flavor::Lie, Q, 3, {tensor(Q, 3, {{0, 1, 2, 1}, {1, 0, 2, -1}})});
}

} // namespace

TEST_CASE("mixed instance counts") {
  CHECK(action_instance_count(Flavor::Dias) == 30);
  CHECK(action_instance_count(Flavor::Leibniz) == 6);
  CHECK(action_instance_count(Flavor::Assoc) == 6);
  CHECK(action_instance_count(Flavor::Lie) == 2);
  CHECK(check_action(Action::trivial(dias_unit(), Algebra::abelian(Flavor::Dias, F2, 2)))
            .items()
            .size() >= 30);
}

TEST_CASE("trivial actions on abelian actees") {
  for (Flavor f : {Flavor::Dias, Flavor::Leibniz, Flavor::Assoc, Flavor::Lie}) {
    Algebra d = f == Flavor::Dias      ? dias_unit()
                : f == Flavor::Leibniz ? ffe()
                : f == Flavor::Assoc   ? as_xxy(F2)
                                       : Algebra::abelian(Flavor::Lie, F2, 2);
    CHECK(check_action(Action::trivial(d, Algebra::abelian(f, F2, 2))).ok());
  }
}

TEST_CASE("actions from ideals and morphisms") {
  Algebra fd = free_dialgebra(F2, 1, 2);
  Subalgebra top = subalgebra(fd, span(F2, 3, {{0, 1, 0}, {0, 0, 1}}));
  CHECK(check_action(action_by_ambient(fd, Matrix::identity(F2, 3), fd, top)).ok());
  CHECK(check_action(action_from_morphism(AlgebraMorphism::identity(dias_unit()))).ok());
  Algebra g = ffe();
  Subalgebra e = subalgebra(g, span(F2, 2, {{1, 0}}));
  CHECK(check_action(action_by_ambient(g, Matrix::identity(F2, 2), g, e)).ok());
}

TEST_CASE("a Lie action read as a Leibniz action") {
  CrossedModule x = embed_identity(heis());
  CHECK(check_action(x.action()).ok());
  CrossedModule y = inc_lie_lb(x);
  CHECK(y.flavor() == Flavor::Leibniz);
  CHECK(check_action(y.action()).ok());
  CHECK(check_crossed(y.mu(), y.action()).ok());
}

TEST_CASE("an invalid action is rejected") {
  Algebra l = Algebra::abelian(Flavor::Dias, F2, 1);
  Algebra d = dias_unit();
  // x -| l = l but every other slot zero breaks (x -| y) -| l = x -| (y |- l)
  Action act{d, l, {tensor(F2, 1, {{0, 0, 0, 1}}), Bilinear(F2, 1)},
             {Bilinear(F2, 1), Bilinear(F2, 1)}};
  CHECK_FALSE(check_action(act).ok());
  CHECK_THROWS_AS(semidirect_product(act), Error);
}

TEST_CASE("semidirect products") {
  Algebra l = Algebra::abelian(Flavor::Dias, F2, 1);
  Algebra d = dias_unit();
  Semidirect s = semidirect_product(Action::trivial(d, l));
  CHECK(s.algebra.dim() == 2);
  CHECK(s.algebra == direct_product(l, d));
  for (std::size_t op = 0; op < 2; ++op)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        CHECK(s.algebra.product(op).at(i, j) ==
              (i == 1 && j == 1 ? vec(F2, {0, 1}) : vec(F2, {0, 0})));
  CHECK(is_morphism(l, s.algebra, s.inj));
  CHECK(is_morphism(s.algebra, d, s.proj));
  CHECK(is_morphism(d, s.algebra, s.split));

  Semidirect dd = semidirect_product(self_action(free_dialgebra(F2, 1, 2)));
  CHECK(dd.algebra.dim() == 6);
  CHECK(dd.algebra.check().ok());
}

TEST_CASE("semidirect products of Leibniz algebras") {
  Algebra q = Algebra::abelian(Flavor::Leibniz, F2, 1);
  Semidirect s = semidirect_product(Action::trivial(ffe(), q));
  CHECK(s.algebra.dim() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(s.algebra.product().at(i, j) ==
            (i == 2 && j == 2 ? vec(F2, {0, 1, 0}) : vec(F2, {0, 0, 0})));
}

TEST_CASE("the action is recovered from the split sequence") {
  for (const char *name : {"xdias-ideal-free", "xdias-bimodule", "xlb-ideal", "xas-ideal"}) {
    CrossedModule x = fixture_xmod(name);
    Semidirect s = semidirect_product(x.action());
    Action back = action_from_split(s.algebra, s.inj, s.split, x.source(), x.target());
    CHECK(back == x.action());
  }
}

TEST_CASE("crossed modules of dialgebras") {
  Algebra fd = free_dialgebra(F2, 1, 2);
  CrossedModule ideal = ideal_inclusion(fd, span(F2, 3, {{0, 1, 0}, {0, 0, 1}}));
  CHECK(check_crossed(ideal.mu(), ideal.action()).ok());
  CrossedModule bim = fixture_xmod("xdias-bimodule");
  CHECK(bim.mu().is_zero());
  CHECK(check_crossed(embed_identity(fd).mu(), embed_identity(fd).action()).ok());
  // identity map with the trivial action breaks the Peiffer identities
  Action triv = Action::trivial(dias_unit(), dias_unit());
  Matrix one = Matrix::identity(F2, 1);
  CHECK_FALSE(check_crossed(one, triv).ok());
  CHECK_THROWS_AS(CrossedModule::make(one, triv), Error);
}

TEST_CASE("crossed modules of the other flavors") {
  CHECK(check_crossed(embed_identity(ffe()).mu(), embed_identity(ffe()).action()).ok());
  CrossedModule lie = fixture_xmod("xlie-trivial");
  CrossedModule lb = inc_lie_lb(lie);
  CHECK(check_crossed(lb.mu(), lb.action()).ok());
  for (const Algebra &a : {ffe(), as_xxy(Q), heis()}) {
    Subspace top = a.dim() == 2 ? Subspace::span(a.field(), 2, std::vector<Vector>{a.basis(a.flavor() == Flavor::Leibniz ? 0 : 1)})
                                : Subspace::span(a.field(), 3, std::vector<Vector>{a.basis(2)});
    CrossedModule x = ideal_inclusion(a, top);
    CHECK(check_crossed(x.mu(), x.action()).ok());
  }
}

TEST_CASE("a surjection with central kernel") {
  Algebra fd = free_dialgebra(F2, 1, 2);
  Algebra d = Algebra::abelian(Flavor::Dias, F2, 1);
  AlgebraMorphism mu{fd, d, mat(F2, {{1, 0, 0}})};
  Action act = action_from_surjection(mu);
  CHECK(check_action(act).ok());
  CHECK(check_crossed(mu.matrix, act).ok());
}

TEST_CASE("structural lemma") {
  auto before = lemma_counters();
  CrossedModule inj = fixture_xmod("xlb-ideal");
  CHECK(lemma_crossed_checks(inj.mu(), inj.action()).ok());
  CrossedModule zero = fixture_xmod("xdias-bimodule");
  Report r = lemma_crossed_checks(zero.mu(), zero.action());
  CHECK(r.ok());
  CHECK(kernel(zero.mu()) == annihilator(zero.source()));
  CrossedModule out = xud(embed_identity(ffe()), 2).output;
  CHECK(lemma_crossed_checks(out.mu(), out.action()).ok());
  auto after = lemma_counters();
  CHECK(after.runs > before.runs);
  CHECK(after.failures == 0);
}

TEST_CASE("crossed-module morphisms") {
  CrossedModule x = fixture_xmod("xdias-ideal-free");
  Matrix il = Matrix::identity(F2, 2), id = Matrix::identity(F2, 3);
  CHECK(check_xmod_morphism(x, x, il, id).ok());
  CHECK(is_xmod_isomorphism(x, x, il, id));
  XQuotient q = xas(x);
  CHECK(check_xmod_morphism(x, inc_as_dias(q.output), q.pi_source(), q.pi_target()).ok());
  Matrix swap = mat(F2, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
  CHECK_FALSE(check_xmod_morphism(x, x, il, swap).ok());
}

TEST_CASE("semidirect homomorphisms agree with the crossed-module check") {
  for (const auto &name : fixture_names("xmod")) {
    CrossedModule x = fixture_xmod(name);
    CHECK(semidirect_homomorphism_checks(x.mu(), x.action()).ok());
  }
  Action triv = Action::trivial(dias_unit(), dias_unit());
  CHECK_FALSE(semidirect_homomorphism_checks(Matrix::identity(F2, 1), triv).ok());
  Action lbtriv = Action::trivial(ffe(), ffe());
  CHECK_FALSE(check_crossed(Matrix::identity(F2, 2), lbtriv).ok());
  CHECK_FALSE(semidirect_homomorphism_checks(Matrix::identity(F2, 2), lbtriv).ok());
}

TEST_CASE("embeddings and projections") {
  Algebra fd = free_dialgebra(F2, 1, 2);
  CHECK(cokernel(embed_zero(fd)).algebra == fd);
  CHECK(embed_identity(fd).source() == fd);
  CrossedModule x = fixture_xmod("xdias-ideal-free");
  CHECK(cokernel(x).algebra.dim() == 1);
}
