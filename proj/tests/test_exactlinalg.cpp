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

#include <random>

#include "diacat/error.hpp"
#include "diacat/linalg.hpp"
#include "test_util.hpp"

using namespace diacat;
using namespace testutil;

TEST_CASE("scalars stay canonical") {
  Scalar a = Scalar::parse(Q, "-6/4");
  CHECK(a.to_string() == "-3/2");
  CHECK((a * a.inverse()).is_one());
  CHECK(Scalar::parse(Q, "5").to_string() == "5");
  CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), Error);
  CHECK_THROWS_AS(Scalar::parse(Q, "6/-4"), Error);
  Field f7 = Field::prime(7);
  CHECK(Scalar::parse(f7, "-1").residue() == 6);
  CHECK(Scalar::parse(f7, "1/3").residue() == 5);
  // Fermat on every residue
  for (long x = 0; x < 7; ++x) {
    Scalar s = Scalar::from_int(f7, x), p = s;
    for (int i = 1; i < 7; ++i)
      p = i == 1 ? s * s : p * s;
    CHECK(p == s);
  }
}

TEST_CASE("rationals do not overflow") {
  Scalar big = Scalar::parse(Q, "123456789012345678901234567891/13");
  Scalar sq = big * big;
  CHECK(sq.to_string() == "15241578753238836750495351562783112365526596557677488187881/169");
}

TEST_CASE("rref") {
  auto z = rref(Matrix::zero(Q, 2, 2));
  CHECK(z.rank == 0);
  CHECK(z.reduced.is_zero());
  auto id = rref(Matrix::identity(F2, 3));
  CHECK(id.rank == 3);
  CHECK(id.reduced == Matrix::identity(F2, 3));
  auto r = rref(mat(Q, {{2, 4}, {1, 2}}));
  CHECK(r.rank == 1);
  CHECK(r.reduced == mat(Q, {{1, 2}, {0, 0}}));
}

TEST_CASE("rref preserves the row space") {
  std::mt19937_64 rng(11);
  Field f5 = Field::prime(5);
  for (int round = 0; round < 50; ++round) {
    Matrix m(f5, 3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        m(i, j) = Scalar::from_int(f5, long(rng() % 5));
    auto r = rref(m);
    Subspace a = Subspace::span(f5, 4, m.row_list());
    Subspace b = Subspace::span(f5, 4, r.reduced.row_list());
    CHECK(a == b);
    CHECK(a.dim() == r.rank);
  }
}

TEST_CASE("span and membership") {
  CHECK(span(Q, 3, {}).dim() == 0);
  CHECK(span(Q, 2, {{1, 0}, {0, 1}}) == Subspace::full(Q, 2));
  Subspace s = span(Q, 2, {{1, 1}, {2, 2}});
  CHECK(s.dim() == 1);
  CHECK(s.basis()[0] == vec(Q, {1, 1}));
  CHECK(s.contains(vec(Q, {0, 0})));
  CHECK_FALSE(span(Q, 2, {{0, 1}}).contains(vec(Q, {1, 0})));
  CHECK(s.contains(vec(Q, {3, 3})));
  CHECK_THROWS_AS(span(Q, 2, {{1, 2, 3}}), Error);
}

TEST_CASE("sums and intersections") {
  Subspace s = span(Q, 3, {{1, 2, 3}});
  CHECK(sum_subspaces(s, Subspace::zero(Q, 3)) == s);
  CHECK(sum_subspaces(span(Q, 2, {{1, 0}}), span(Q, 2, {{0, 1}})) == Subspace::full(Q, 2));
  CHECK(sum_subspaces(span(Q, 3, {{1, 1, 0}}), span(Q, 3, {{1, 1, 1}})).dim() == 2);
  CHECK(intersect_subspaces(span(Q, 3, {{1, 0, 0}, {0, 1, 0}}), span(Q, 3, {{0, 1, 0}, {0, 0, 1}})) ==
        span(Q, 3, {{0, 1, 0}}));
}

TEST_CASE("quotient bases") {
  auto q0 = quotient_basis(2, Subspace::zero(Q, 2));
  CHECK(q0.section == std::vector<std::size_t>{0, 1});
  CHECK(q0.project == Matrix::identity(Q, 2));
  auto qf = quotient_basis(2, Subspace::full(Q, 2));
  CHECK(qf.dim() == 0);
  CHECK(qf.project.rows() == 0);
  CHECK(qf.project.cols() == 2);
  Subspace i = span(Q, 2, {{1, 1}});
  auto q = quotient_basis(2, i);
  CHECK(q.section == std::vector<std::size_t>{1});
  CHECK(q.project == mat(Q, {{-1, 1}}));
  // v - section(project(v)) lies in i
  for (auto v : {vec(Q, {3, 5}), vec(Q, {-2, 7}), vec(Q, {0, 1})})
    CHECK(i.contains(v - q.lift().apply(q.project.apply(v))));
  CHECK(q.project * q.lift() == Matrix::identity(Q, 1));
}

TEST_CASE("kernels, solving and inverses") {
  Matrix m = mat(Q, {{1, 2, 3}, {2, 4, 6}});
  Subspace k = kernel(m);
  CHECK(k.dim() == 2);
  for (const auto &v : k.basis())
    CHECK(m.apply(v).is_zero());
  CHECK(image(m).dim() == 1);
  Vector x;
  CHECK(solve(m, vec(Q, {1, 2}), x));
  CHECK(m.apply(x) == vec(Q, {1, 2}));
  CHECK_FALSE(solve(m, vec(Q, {1, 3}), x));
  Matrix inv;
  CHECK(invert(mat(Q, {{2, 1}, {1, 1}}), inv));
  CHECK(inv == mat(Q, {{1, -1}, {-1, 2}}));
  CHECK_FALSE(invert(mat(F2, {{1, 1}, {1, 1}}), inv));
}

TEST_CASE("subspace equality is structural") {
  Subspace a = span(F2, 3, {{1, 1, 0}, {0, 1, 1}});
  Subspace b = span(F2, 3, {{1, 0, 1}, {1, 1, 0}});
  CHECK(a == b);
  CHECK(a.contains(b));
  CHECK(b.contains(a));
}
