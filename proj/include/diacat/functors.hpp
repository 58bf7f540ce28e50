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
// Functors between the crossed-module categories of the four flavors.

#ifndef DIACAT_FUNCTORS_HPP
#define DIACAT_FUNCTORS_HPP

#include "diacat/envelope.hpp"

namespace diacat {

/// XLB: Leibnization of both algebras, [x,l] = x -| l - l |- x and
/// [l,x] = l -| x - x |- l.
CrossedModule xlb(const CrossedModule &x);
/// XLiea: commutators on both levels, [a,r] = ar - ra.
CrossedModule xliea(const CrossedModule &x);
/// Inclusions XAs -> XDias and XLie -> XLb (same data, retagged).
CrossedModule inc_as_dias(const CrossedModule &x);
CrossedModule inc_lie_lb(const CrossedModule &x);

/// Output of XAS or XLiel together with the canonical projections.
struct XQuotient {
  CrossedModule input, output;
  QuotientAlgebra source_q, target_q;
  Subspace source_ideal;
  const Matrix &pi_source() const noexcept { return source_q.projection; }
  const Matrix &pi_target() const noexcept { return target_q.projection; }
};

/// AS(D) on the target; the source modulo the ideal generated by
/// l -| l' - l |- l', x -| l - x |- l and l -| x - l |- x (x in D), closed
/// under the products of L and the action of D.
XQuotient xas(const CrossedModule &x);
/// Liel(g) on the target; the source modulo the ideal generated by [l,l]
/// and [x,l] + [l,x], closed the same way.
XQuotient xliel(const CrossedModule &x);
/// A morphism x -> inc(z) into the subcategory, factored through the
/// projections. Throws Errc::NotAMorphism when it does not kill the ideals.
XmodPair factor_through(const XQuotient &q, const XmodPair &f);
/// XAS (resp. XLiel) on a morphism f : from.input -> to.input.
XmodPair xquot_map(const XQuotient &from, const XQuotient &to, const XmodPair &f);

} // namespace diacat

#endif
