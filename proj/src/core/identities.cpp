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

#include "identities.hpp"

namespace diacat {

namespace {

// v o b_k
Vector prod_vb(const Bilinear &p, const Vector &v, std::size_t k) {
  Vector out(p.field(), p.out_dim());
  for (std::size_t m = 0; m < v.size(); ++m)
    if (!v[m].is_zero())
      out.axpy(v[m], p.at(m, k));
  return out;
}

// b_i o w
Vector prod_bv(const Bilinear &p, std::size_t i, const Vector &w) {
  Vector out(p.field(), p.out_dim());
  for (std::size_t m = 0; m < w.size(); ++m)
    if (!w[m].is_zero())
      out.axpy(w[m], p.at(i, m));
  return out;
}

constexpr std::size_t L = 0, R = 1;

} // namespace

const std::vector<Identity> &identities(Flavor f) {
  static const std::vector<Identity> dias = {
      {"(x-|y)-|z = x-|(y|-z)", Identity::Assoc, 3, L, L, L, R},
      {"(x-|y)-|z = x-|(y-|z)", Identity::Assoc, 3, L, L, L, L},
      {"(x|-y)-|z = x|-(y-|z)", Identity::Assoc, 3, R, L, R, L},
      {"(x-|y)|-z = x|-(y|-z)", Identity::Assoc, 3, L, R, R, R},
      {"(x|-y)|-z = x|-(y|-z)", Identity::Assoc, 3, R, R, R, R},
  };
  static const std::vector<Identity> leib = {
      {"[x,[y,z]] = [[x,y],z] - [[x,z],y]", Identity::Leibniz, 3},
  };
  static const std::vector<Identity> assoc = {
      {"(xy)z = x(yz)", Identity::Assoc, 3, 0, 0, 0, 0},
  };
  static const std::vector<Identity> lie = {
      {"[x,x] = 0", Identity::Alternate, 1},
      {"[x,y] + [y,x] = 0", Identity::AntiSym, 2},
      {"[x,[y,z]] = [[x,y],z] - [[x,z],y]", Identity::Leibniz, 3},
  };
  switch (f) {
  case Flavor::Dias: return dias;
  case Flavor::Leibniz: return leib;
  case Flavor::Assoc: return assoc;
  case Flavor::Lie: return lie;
  }
  return assoc;
}

Evaluated eval_identity(const Identity &id, const std::vector<Bilinear> &p, std::size_t i,
                        std::size_t j, std::size_t k) {
  switch (id.kind) {
  case Identity::Assoc:
    return {prod_vb(p[id.op2], p[id.op1].at(i, j), k), prod_bv(p[id.op3], i, p[id.op4].at(j, k))};
  case Identity::Leibniz: {
    const Bilinear &b = p[0];
    Vector rhs = prod_vb(b, b.at(i, j), k);
    rhs -= prod_vb(b, b.at(i, k), j);
    return {prod_bv(b, i, b.at(j, k)), std::move(rhs)};
  }
  case Identity::Alternate:
    return {p[0].at(i, i), Vector(p[0].field(), p[0].out_dim())};
  case Identity::AntiSym:
    return {p[0].at(i, j) + p[0].at(j, i), Vector(p[0].field(), p[0].out_dim())};
  }
  return {Vector(p[0].field(), 0), Vector(p[0].field(), 0)};
}

} // namespace diacat
