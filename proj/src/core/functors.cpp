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

#include "diacat/functors.hpp"

#include "diacat/error.hpp"

namespace diacat {

namespace {

void require_xflavor(const CrossedModule &x, Flavor f, const char *what) {
  if (x.flavor() != f)
    fail(Errc::FlavorMismatch, std::string(what) + " takes a " + flavor_name(f) +
                                   " crossed module, got " + flavor_name(x.flavor()));
}

// smallest ideal of L containing seed and stable under the action of D
Subspace action_ideal(const Action &act, const std::vector<Vector> &seed) {
  const Algebra &l = act.actee;
  auto maps = multiplication_maps(l);
  for (std::size_t i = 0; i < act.actor.dim(); ++i) {
    Vector x = act.actor.basis(i);
    for (const auto &t : act.left)
      maps.push_back(t.left_mult(x));
    for (const auto &t : act.right)
      maps.push_back(t.right_mult(x));
  }
  return invariant_closure(Subspace::span(l.field(), l.dim(), seed), maps);
}

// induced tensors on the quotients; representatives of kernel elements must
// land in the source ideal
Bilinear induced_left(const Bilinear &t, const XQuotient &q) {
  return t.transformed(q.source_q.projection, q.target_q.lift(), q.source_q.lift());
}
Bilinear induced_right(const Bilinear &t, const XQuotient &q) {
  return t.transformed(q.source_q.projection, q.source_q.lift(), q.target_q.lift());
}

void require_well_defined(const Action &act, const Subspace &d_ideal, const Subspace &l_ideal,
                          const char *what) {
  const Algebra &l = act.actee;
  for (const auto &k : d_ideal.basis())
    for (std::size_t j = 0; j < l.dim(); ++j) {
      Vector b = l.basis(j);
      for (std::size_t op = 0; op < act.left.size(); ++op)
        if (!l_ideal.contains(act.left[op].apply(k, b)) ||
            !l_ideal.contains(act.right[op].apply(b, k)))
          fail(Errc::Internal, std::string(what) + ": induced action depends on representatives");
    }
}

} // namespace

CrossedModule xlb(const CrossedModule &x) {
  require_xflavor(x, Flavor::Dias, "XLB");
  const Action &a = x.action();
  Bilinear gq = a.left[0] - a.right[1].swapped();
  Bilinear qg = a.right[0] - a.left[1].swapped();
  Action act{lb(a.actor), lb(a.actee), {std::move(gq)}, {std::move(qg)}};
  return CrossedModule::make(x.mu(), std::move(act));
}

CrossedModule xliea(const CrossedModule &x) {
  require_xflavor(x, Flavor::Assoc, "XLiea");
  const Action &a = x.action();
  Bilinear pm = a.left[0] - a.right[0].swapped();
  return CrossedModule::make(x.mu(), Action::lie(liea(a.actor), liea(a.actee), pm));
}

CrossedModule inc_as_dias(const CrossedModule &x) {
  require_xflavor(x, Flavor::Assoc, "inclusion XAs -> XDias");
  const Action &a = x.action();
  Action act{dias_of_as(a.actor), dias_of_as(a.actee), {a.left[0], a.left[0]},
             {a.right[0], a.right[0]}};
  return CrossedModule::make(x.mu(), std::move(act));
}

CrossedModule inc_lie_lb(const CrossedModule &x) {
  require_xflavor(x, Flavor::Lie, "inclusion XLie -> XLb");
  const Action &a = x.action();
  Action act{lb_of_lie(a.actor), lb_of_lie(a.actee), a.left, a.right};
  return CrossedModule::make(x.mu(), std::move(act));
}

XQuotient xas(const CrossedModule &x) {
  require_xflavor(x, Flavor::Dias, "XAS");
  const Action &a = x.action();
  const Algebra &l = a.actee, &d = a.actor;
  std::vector<Vector> seed;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j)
      seed.push_back(l.product(0).at(i, j) - l.product(1).at(i, j));
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j) {
      seed.push_back(a.left[0].at(i, j) - a.left[1].at(i, j));
      seed.push_back(a.right[0].at(j, i) - a.right[1].at(j, i));
    }
  Subspace ideal = action_ideal(a, seed);
  auto sq = quotient_algebra(l, ideal);
  sq.algebra = Algebra::make(Flavor::Assoc, l.field(), sq.algebra.dim(), {sq.algebra.product(0)},
                             sq.algebra.labels());
  auto tq = as_functor(d);
  require_well_defined(a, kernel(tq.projection), ideal, "XAS");

  XQuotient out{x, x, sq, tq, ideal};
  Action act{tq.algebra, sq.algebra, {induced_left(a.left[0], out)},
             {induced_right(a.right[0], out)}};
  Matrix mu = tq.projection * x.mu() * sq.lift();
  out.output = CrossedModule::make(std::move(mu), std::move(act));
  return out;
}

XQuotient xliel(const CrossedModule &x) {
  require_xflavor(x, Flavor::Leibniz, "XLiel");
  const Action &a = x.action();
  const Algebra &l = a.actee, &d = a.actor;
  const Bilinear &br = l.product();
  std::vector<Vector> seed;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    seed.push_back(br.at(i, i));
    for (std::size_t j = i + 1; j < l.dim(); ++j)
      seed.push_back(br.at(i, j) + br.at(j, i));
  }
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j)
      seed.push_back(a.left[0].at(i, j) + a.right[0].at(j, i));
  Subspace ideal = action_ideal(a, seed);
  auto sq = quotient_algebra(l, ideal);
  sq.algebra = Algebra::make(Flavor::Lie, l.field(), sq.algebra.dim(), {sq.algebra.product()},
                             sq.algebra.labels());
  auto tq = liel(d);
  require_well_defined(a, kernel(tq.projection), ideal, "XLiel");

  XQuotient out{x, x, sq, tq, ideal};
  Bilinear pm = induced_left(a.left[0], out);
  Matrix mu = tq.projection * x.mu() * sq.lift();
  out.output = CrossedModule::make(std::move(mu), Action::lie(tq.algebra, sq.algebra, pm));
  return out;
}

XmodPair factor_through(const XQuotient &q, const XmodPair &f) {
  for (const auto &v : q.source_ideal.basis())
    if (!f.alpha.apply(v).is_zero())
      fail(Errc::NotAMorphism, "source component does not vanish on the ideal");
  Subspace target_ideal = kernel(q.target_q.projection);
  for (const auto &v : target_ideal.basis())
    if (!f.beta.apply(v).is_zero())
      fail(Errc::NotAMorphism, "target component does not vanish on the ideal");
  return XmodPair{f.alpha * q.source_q.lift(), f.beta * q.target_q.lift()};
}

XmodPair xquot_map(const XQuotient &from, const XQuotient &to, const XmodPair &f) {
  return factor_through(from, XmodPair{to.pi_source() * f.alpha, to.pi_target() * f.beta});
}

} // namespace diacat
