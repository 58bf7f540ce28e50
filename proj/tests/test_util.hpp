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
// Small builders shared by the unit tests.

#ifndef DIACAT_TEST_UTIL_HPP
#define DIACAT_TEST_UTIL_HPP

#include <array>
#include <initializer_list>
#include <vector>

#include "diacat/algebra.hpp"

namespace testutil {

using namespace diacat;

inline const Field Q = Field::rationals();
inline const Field F2 = Field::prime(2);

inline Vector vec(Field f, std::initializer_list<long> xs) {
  std::vector<Scalar> s;
  for (long x : xs)
    s.push_back(Scalar::from_int(f, x));
  return Vector(f, s);
}

inline Matrix mat(Field f, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> rs;
  for (auto r : rows)
    rs.push_back(vec(f, r));
  std::size_t cols = rs.empty() ? 0 : rs[0].size();
  return Matrix::from_rows(f, cols, rs);
}

inline Subspace span(Field f, std::size_t n, std::initializer_list<std::initializer_list<long>> vs) {
  std::vector<Vector> v;
  for (auto x : vs)
    v.push_back(vec(f, x));
  return Subspace::span(f, n, v);
}

// (i, j, k, c): b_i o b_j gets c b_k
inline Bilinear tensor(Field f, std::size_t n, std::initializer_list<std::array<long, 4>> ts) {
  Bilinear t(f, n);
  for (auto [i, j, k, c] : ts)
    t.at(i, j)[k] += Scalar::from_int(f, c);
  return t;
}

inline Algebra ffe() {
  return Algebra::make(Flavor::Leibniz, F2, 2, {tensor(F2, 2, {{1, 1, 0, 1}})}, {"e", "f"});
}

inline Algebra as_xxy(Field f) {
  return Algebra::make(Flavor::Assoc, f, 2, {tensor(f, 2, {{0, 0, 1, 1}})}, {"x", "y"});
}

inline Algebra dias_unit() {
  Bilinear t = tensor(F2, 1, {{0, 0, 0, 1}});
  return Algebra::make(Flavor::Dias, F2, 1, {t, t});
}

} // namespace testutil

#endif
