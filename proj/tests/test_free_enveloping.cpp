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

#include "diacat/error.hpp"
#include "diacat/fixtures.hpp"
#include "diacat/functors.hpp"
#include "test_util.hpp"

using namespace diacat;
using namespace testutil;

namespace {

std::size_t power_sum(std::size_t g, std::size_t n, bool weighted) {
  std::size_t total = 0, p = 1;
  for (std::size_t l = 1; l <= n; ++l) {
    p *= g;
    total += weighted ? l * p : p;
  }
  return total;
}

std::size_t word_index(const std::vector<Word> &ws, std::vector<std::uint32_t> letters,
                       std::size_t center) {
  for (std::size_t i = 0; i < ws.size(); ++i)
    if (ws[i].letters == letters && ws[i].center == center)
      return i;
  FAIL("word not found");
  return 0;
}

Algebra heis() {
  return Algebra::make(Flavor::Lie, Q, 3, {tensor(Q, 3, {{0, 1, 2, 1}, {1, 0, 2, -1}})});
}

} // namespace

TEST_CASE("free dialgebra dimensions") {
  CHECK(free_dialgebra(F2, 1, 1).dim() == 1);
  CHECK(free_dialgebra(F2, 1, 2).dim() == 3);
  CHECK(free_dialgebra(F2, 2, 2).dim() == 10);
  for (std::size_t g = 1; g <= 3; ++g)
    for (std::size_t n = 1; n <= 3; ++n) {
      CHECK(dialgebra_words(g, n).size() == power_sum(g, n, true));
      CHECK(tensor_words(g, n).size() == power_sum(g, n, false));
    }
  CHECK(free_dialgebra(F2, 0, 2).dim() == 0);
  CHECK_THROWS_AS(free_dialgebra(F2, 1, 0), Error);
}

TEST_CASE("free objects satisfy their axioms") {
  CHECK(free_dialgebra(F2, 2, 3).check().ok());
  CHECK(free_dialgebra(Q, 2, 2).check().ok());
  CHECK(tensor_algebra(F2, 2, 3).check().ok());
  CHECK(tensor_algebra(F2, 2, 2).dim() == 6);
}

TEST_CASE("products of the length-two words") {
  Algebra fd = free_dialgebra(F2, 1, 2);
  auto ws = dialgebra_words(1, 2);
  std::size_t v = word_index(ws, {0}, 0);
  std::size_t c0 = word_index(ws, {0, 0}, 0), c1 = word_index(ws, {0, 0}, 1);
  CHECK(v == 0);
  // -| keeps the left center, |- takes the right one
  CHECK(fd.product(0).at(v, v) == fd.basis(c0));
  CHECK(fd.product(1).at(v, v) == fd.basis(c1));
  CHECK(fd.product(0).at(v, c0).is_zero());
  CHECK(fd.product(1).at(c1, v).is_zero());
  CHECK(word_less(ws[0], ws[1]));
  CHECK(word_less(ws[1], ws[2]));
}

TEST_CASE("enveloping dialgebras") {
  Algebra ab1 = Algebra::abelian(Flavor::Leibniz, F2, 1);
  Envelope u = ud(ab1, 2);
  CHECK(u.free.dim() == 3);
  CHECK(u.algebra().dim() == 2);

  Envelope v = ud(ffe(), 2);
  CHECK(v.free.dim() == 10);
  std::size_t e = word_index(v.words, {0}, 0);
  std::size_t ff0 = word_index(v.words, {1, 1}, 0), ff1 = word_index(v.words, {1, 1}, 1);
  Vector rel = v.free.basis(e) - v.free.basis(ff0) + v.free.basis(ff1);
  CHECK(v.relations.contains(rel));
  CHECK(v.quotient.projection.apply(rel).is_zero());
  CHECK(v.eta.column(0) == v.quotient.projection.apply(v.free.basis(ff0) - v.free.basis(ff1)));
  CHECK(is_morphism(ffe(), lb(v.algebra()), v.eta));
  CHECK(is_nilpotent(v.algebra(), 2));
  CHECK(v.algebra().check().ok());
}

TEST_CASE("enveloping algebras of Lie algebras") {
  CHECK(u_lie(Algebra::abelian(Flavor::Lie, F2, 1), 2).algebra().dim() == 2);
  CHECK(u_lie(Algebra::abelian(Flavor::Lie, F2, 2), 2).algebra().dim() == 5);
  // twelve words; the ideal holds the five products with e2 and xy - yx - [x,y]
  Envelope h = u_lie(heis(), 2);
  CHECK(h.free.dim() == 12);
  CHECK(h.relations.dim() == 6);
  CHECK(h.algebra().dim() == 6);
  CHECK(is_morphism(heis(), liea(h.algebra()), h.eta));
}

TEST_CASE("universal extension") {
  Envelope v = ud(ffe(), 2);
  Matrix ext = extend(v, v.algebra(), v.eta);
  CHECK(ext == Matrix::identity(F2, v.algebra().dim()));
  Matrix f = envelope_map(v, v, Matrix::identity(F2, 2));
  CHECK(f == ext);
  // v -| v and v |- v stay distinct in the free dialgebra
  Algebra big = free_dialgebra(F2, 1, 3);
  Algebra ab1 = Algebra::abelian(Flavor::Leibniz, F2, 1);
  Envelope u = ud(ab1, 2);
  Matrix to_big = mat(F2, {{1}, {0}, {0}, {0}, {0}, {0}});
  CHECK_THROWS_AS(extend(u, big, to_big), Error);
}

TEST_CASE("XUd on the embeddings") {
  Envelope env = ud(ffe(), 2);
  XEnvelope z = xud(embed_zero(ffe()), 2);
  CHECK(z.output.source().dim() == 0);
  CHECK(z.output.target().dim() == env.algebra().dim());
  XEnvelope one = xud(embed_identity(ffe()), 2);
  CHECK(one.output.source().dim() == env.algebra().dim());
  CHECK(one.output.target().dim() == env.algebra().dim());
  Matrix inv;
  CHECK(invert(one.output.mu(), inv));
}

TEST_CASE("XUd on the ideal crossed module") {
  XEnvelope xe = xud(fixture_xmod("xlb-ideal"), 2);
  CHECK(xe.env_e.algebra().dim() == 7);
  CHECK(xe.x.dim() == 1);
  CHECK(xe.output.source().dim() == 3);
  CHECK(xe.output.target().dim() == 3);
  CHECK(check_cat1(xe.cat1_out).ok());
  XmodPair unit = xenv_unit(xe);
  CHECK(check_xmod_morphism(xe.input, xlb(xe.output), unit.alpha, unit.beta).ok());
}

TEST_CASE("XU on a Lie crossed module") {
  XEnvelope xe = xu(fixture_xmod("xlie-trivial"), 2);
  CHECK(xe.output.flavor() == Flavor::Assoc);
  XmodPair unit = xenv_unit(xe);
  CHECK(check_xmod_morphism(xe.input, xliea(xe.output), unit.alpha, unit.beta).ok());
  CHECK(xenvelope(fixture_xmod("xlb-zero"), 2).output.flavor() == Flavor::Dias);
}

TEST_CASE("XUd on a morphism") {
  CrossedModule x = fixture_xmod("xlb-ideal");
  XEnvelope xe = xud(x, 2);
  XmodPair id{Matrix::identity(F2, x.source().dim()), Matrix::identity(F2, x.target().dim())};
  XmodPair m = xenv_map(xe, xe, id);
  CHECK(m.alpha == Matrix::identity(F2, xe.output.source().dim()));
  CHECK(m.beta == Matrix::identity(F2, xe.output.target().dim()));
}
