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
// cat1-objects and internal categories, with the conversions to and from
// crossed modules. Works for every flavor.

#ifndef DIACAT_CAT1_HPP
#define DIACAT_CAT1_HPP

#include "diacat/action.hpp"

namespace diacat {

/// (E, D, s, t) with D carried as its own algebra plus an injective
/// morphism incl : D -> E.
struct Cat1Object {
  Algebra E, D;
  Matrix incl; // dim E x dim D
  Matrix s, t; // dim D x dim E

  Flavor flavor() const noexcept { return E.flavor(); }
  /// D given as a subalgebra of E; s and t in the coordinates of d_sub.
  static Cat1Object from_subspace(const Algebra &e, const Subspace &d_sub, Matrix s, Matrix t);
};

/// Morphisms, D a subalgebra, s|D = t|D = id, and all products between Ker s
/// and Ker t vanish.
Report check_cat1(const Cat1Object &c);

/// L = Ker s, mu = t|L, D acting by products in E. Errc::InvalidCat1.
CrossedModule phi(const Cat1Object &c);
/// E = L|xD, s(l,x) = x, t(l,x) = mu(l) + x, D included as (0, x).
Cat1Object to_cat1(const CrossedModule &x);

/// f : a.E -> b.E and g : a.D -> b.D commuting with incl, s and t.
Report check_cat1_morphism(const Cat1Object &a, const Cat1Object &b, const Matrix &f,
                           const Matrix &g);
bool is_cat1_isomorphism(const Cat1Object &a, const Cat1Object &b, const Matrix &f,
                         const Matrix &g);
/// Map to_cat1(phi(c)).E -> c.E, (l, x) |-> l + incl(x); paired with id_D it
/// is an isomorphism of cat1-objects.
Matrix cat1_roundtrip_witness(const Cat1Object &c);

struct InternalCategory {
  Cat1Object base;       // sigma = base.incl
  Subalgebra pullback;   // E x_D E inside E x E
  Matrix gamma;          // dim E x dim pullback
  const Matrix &sigma() const noexcept { return base.incl; }
};

/// Composable pairs {(a, b) : t(a) = s(b)} as a subalgebra of E x E.
Subalgebra pullback(const Cat1Object &c);
/// The canonical composition gamma(a, b) = a - sigma t(a) + b.
InternalCategory internal_of_cat1(const Cat1Object &c);
/// gamma((l,x),(l',x+mu(l))) = (l+l', x), sigma(x) = (0,x).
InternalCategory to_internal(const CrossedModule &x);
/// Category axioms: sigma a section of s and t, gamma a morphism compatible
/// with s and t, unit laws, associativity, and gamma(l, sigma mu(l) + l') = l + l'.
Report check_internal(const InternalCategory &ic);
/// L = Ker s, mu = t|L, action through sigma. Errc::InvalidInternalCategory.
CrossedModule psi(const InternalCategory &ic);

} // namespace diacat

#endif
