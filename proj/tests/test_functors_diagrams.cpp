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
#include "diacat/error.hpp"
#include "diacat/fixtures.hpp"
#include "diacat/verify.hpp"
#include "test_util.hpp"

using namespace diacat;
using namespace testutil;

namespace {

// every m x n matrix over F2, filtered by is_morphism
std::size_t brute_hom_count(const Algebra &a, const Algebra &b) {
  std::size_t cells = a.dim() * b.dim(), count = 0;
  for (std::size_t bits = 0; bits < (std::size_t(1) << cells); ++bits) {
    Matrix m(F2, b.dim(), a.dim());
    for (std::size_t c = 0; c < cells; ++c)
      if (bits >> c & 1)
        m(c / a.dim(), c % a.dim()) = Scalar::from_int(F2, 1);
    count += is_morphism(a, b, m);
  }
  return count;
}

bool matches(const SquareInfo &sq, const SquareInput &in) { return category_of(in) == sq.source; }

} // namespace

TEST_CASE("XLB and XLiea") {
  CrossedModule x = fixture_xmod("xdias-ideal-free");
  CrossedModule y = xlb(x);
  CHECK(y.flavor() == Flavor::Leibniz);
  CHECK(y.source() == lb(x.source()));
  CHECK(y.target() == lb(x.target()));
  CHECK(y.mu() == x.mu());
  CrossedModule a = fixture_xmod("xas-ideal");
  CrossedModule l = xliea(a);
  CHECK(l.flavor() == Flavor::Lie);
  CHECK(l.target() == liea(a.target()));
  CHECK(inc_as_dias(a).target() == dias_of_as(a.target()));
  CHECK(inc_lie_lb(l).flavor() == Flavor::Leibniz);
}

TEST_CASE("XAS and XLiel") {
  CrossedModule x = fixture_xmod("xdias-ideal-free");
  XQuotient q = xas(x);
  CHECK(q.output.flavor() == Flavor::Assoc);
  CHECK(q.output.target() == as_functor(x.target()).algebra);
  CHECK(check_xmod_morphism(x, inc_as_dias(q.output), q.pi_source(), q.pi_target()).ok());
  XmodPair f{q.pi_source(), q.pi_target()};
  XmodPair g = factor_through(q, f);
  CHECK(g.alpha == Matrix::identity(F2, q.output.source().dim()));
  CHECK(g.beta == Matrix::identity(F2, q.output.target().dim()));

  CrossedModule lb = fixture_xmod("xlb-ideal");
  XQuotient r = xliel(lb);
  CHECK(r.output.flavor() == Flavor::Lie);
  CHECK(r.output.target() == liel(lb.target()).algebra);
  CHECK(check_xmod_morphism(lb, inc_lie_lb(r.output), r.pi_source(), r.pi_target()).ok());
}

TEST_CASE("embeddings against projections") {
  for (const auto &name : fixture_names("algebra")) {
    Algebra a = fixture_algebra(name);
    if (!a.check().ok())
      continue;
    CHECK(cokernel(embed_zero(a)).algebra == a);
    CHECK(cokernel(embed_identity(a)).algebra.dim() == 0);
    CHECK(embed_identity(a).target() == a);
  }
}

TEST_CASE("hom counts") {
  Algebra zero = Algebra::abelian(Flavor::Leibniz, F2, 0);
  CHECK(enumerate_homs(zero, ffe()).size() == 1);
  Algebra ab1 = Algebra::abelian(Flavor::Leibniz, F2, 1);
  CHECK(enumerate_homs(ab1, ab1).size() == 2);
  CHECK(enumerate_homs(ffe(), ffe()).size() == 4);
  CHECK_THROWS_AS(enumerate_homs(as_xxy(Q), as_xxy(Q)), Error);
  CHECK(find_algebra_isomorphism(ffe(), ffe()).has_value());
  CHECK_FALSE(find_algebra_isomorphism(ffe(), Algebra::abelian(Flavor::Leibniz, F2, 2)));
}

TEST_CASE("hom enumeration against brute force") {
  auto ds = all_f2_dialgebras(2);
  REQUIRE(ds.size() == 49);
  auto small = all_f2_dialgebras(1);
  for (std::size_t i = 0; i < ds.size(); i += 6)
    for (std::size_t j = 0; j < ds.size(); j += 7)
      CHECK(enumerate_homs(ds[i], ds[j]).size() == brute_hom_count(ds[i], ds[j]));
  for (const auto &a : small)
    for (const auto &b : ds)
      CHECK(enumerate_homs(a, b).size() == brute_hom_count(a, b));
}

TEST_CASE("crossed-module hom sets") {
  CrossedModule x = fixture_xmod("xlb-ideal");
  auto hs = enumerate_xmod_homs(x, x);
  bool has_id = false;
  for (const auto &h : hs) {
    CHECK(check_xmod_morphism(x, x, h.alpha, h.beta).ok());
    has_id |= h.alpha == Matrix::identity(F2, 1) && h.beta == Matrix::identity(F2, 2);
  }
  CHECK(has_id);
  CHECK(find_xmod_isomorphism(x, x).has_value());
}

TEST_CASE("every square on matching fixtures") {
  std::vector<SquareInput> inputs;
  for (const auto &name : fixture_names("algebra")) {
    Algebra a = fixture_algebra(name);
    if (a.field() == F2 && a.check().ok())
      inputs.push_back(a);
  }
  for (const auto &name : fixture_names("xmod")) {
    CrossedModule x = fixture_xmod(name);
    if (x.field() == F2)
      inputs.push_back(x);
  }
  REQUIRE(square_registry().size() == 20);
  for (const auto &sq : square_registry()) {
    std::size_t used = 0;
    for (const auto &in : inputs) {
      if (!matches(sq, in))
        continue;
      SquareResult r = check_square(sq.id, in, 2);
      CAPTURE(sq.id);
      CHECK(r.passed());
      ++used;
    }
    CHECK(used > 0);
  }
  CHECK_THROWS_AS(check_square("LbDias-J0", SquareInput{ffe()}, 2), Error);
  CHECK_THROWS_AS(square_info("no-such-square"), Error);
}

TEST_CASE("the Leibniz squares") {
  SquareResult j0 = check_square("LbDias-XUd-J0", SquareInput{ffe()}, 2);
  SquareResult j1 = check_square("LbDias-XUd-J1", SquareInput{ffe()}, 2);
  CHECK(j0.got == Verdict::Equal);
  CHECK(j1.got != Verdict::Fail);
  CHECK(j1.passed());
}

TEST_CASE("enveloping adjunctions") {
  Algebra ab1 = Algebra::abelian(Flavor::Leibniz, F2, 1);
  BijectionReport r = verify_adjunction_ud(ab1, free_dialgebra(F2, 1, 2), 2);
  CHECK(r.ok());
  CHECK(r.left == 4);
  CHECK(r.right == 4);
  BijectionReport s = verify_adjunction_ud(ffe(), ud(ffe(), 2).algebra(), 2);
  CHECK(s.ok());
  CHECK(s.left == s.right);
  CrossedModule x = fixture_xmod("xlb-ideal");
  CrossedModule y = xud(x, 2).output;
  BijectionReport t = verify_adjunction_xud(x, y, 2);
  CHECK(t.ok());
  CHECK(t.left == 32);
}

TEST_CASE("adjunction chains") {
  for (int i : {0, 1}) {
    CHECK(verify_adjunction_chain(i, fixture_xmod("xlb-ideal"), ffe()).ok());
    CHECK(verify_adjunction_chain(i, fixture_xmod("xdias-ideal-free"), dias_unit()).ok());
  }
}

TEST_CASE("the parallelepiped") {
  for (const char *name : {"xdias-ideal-free", "xlb-ideal", "xlie-trivial", "xas-id"}) {
    CAPTURE(name);
    FaceReport f = check_parallelepiped(fixture_xmod(name), 2);
    CHECK(f.ok());
    CHECK(!f.faces.empty());
  }
}
