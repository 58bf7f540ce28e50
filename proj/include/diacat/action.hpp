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
// Actions, semidirect products and crossed modules for all four flavors.

#ifndef DIACAT_ACTION_HPP
#define DIACAT_ACTION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "diacat/algebra.hpp"

namespace diacat {

/// An action of `actor` (D) on `actee` (L). For every product o of the
/// flavor, left[o] : D x L -> L and right[o] : L x D -> L.
///   dias: left = {dl_left, dl_right}, right = {ld_left, ld_right}
///   lb:   left = {gq}, right = {qg}
///   as:   left = {ar}, right = {ra}
///   lie:  left = {pm}, right = {-pm swapped}
struct Action {
  Algebra actor, actee;
  std::vector<Bilinear> left, right;

  Flavor flavor() const noexcept { return actor.flavor(); }
  Vector act_left(std::size_t op, const Vector &x, const Vector &l) const {
    return left[op].apply(x, l);
  }
  Vector act_right(std::size_t op, const Vector &l, const Vector &x) const {
    return right[op].apply(l, x);
  }
  bool is_trivial() const noexcept;

  static Action trivial(const Algebra &actor, const Algebra &actee);
  /// Lie action from the single tensor pm : P x M -> M.
  static Action lie(const Algebra &p, const Algebra &m, const Bilinear &pm);

  friend bool operator==(const Action &a, const Action &b);
};

/// Names of the per-flavor tensor slots in the order left..., right...
std::vector<std::string> action_slot_names(Flavor f);

/// Mixed instances of the flavor identities ("one variable on the other
/// side"): 30 for dialgebras, 6 for Leibniz and associative algebras. Lie
/// actions use their two defining equations instead.
std::size_t action_instance_count(Flavor f);

/// Shape checks plus every mixed instance on basis elements.
Report check_action(const Action &act);

struct Semidirect {
  Algebra algebra; // L (+) D, L coordinates first
  Matrix inj;      // L -> L|xD, l |-> (l, 0)
  Matrix proj;     // L|xD -> D, (l, x) |-> x
  Matrix split;    // D -> L|xD, x |-> (0, x)
};

/// (l1,x1) o (l2,x2) = (l1 o l2 + x1 o l2 + l1 o x2, x1 o x2). With verify
/// set the result must pass its flavor check (Errc::InvalidAction).
Semidirect semidirect_product(const Action &act, bool verify = true);

/// Action of D on L read off from products in E through a split extension
/// 0 -> L -inj-> E -proj-> D -> 0 with section split.
Action action_from_split(const Algebra &e, const Matrix &inj, const Matrix &split,
                         const Algebra &l, const Algebra &d);
/// Action of d (mapped into e by incl_d) on the subalgebra l of e by the
/// ambient products; l must be stable under it.
Action action_by_ambient(const Algebra &e, const Matrix &incl_d, const Algebra &d,
                         const Subalgebra &l);
/// D acting on itself by its own products.
Action self_action(const Algebra &d);
/// x o l = f(x) o l and l o x = l o f(x) for a morphism f : D -> L.
Action action_from_morphism(const AlgebraMorphism &f);
/// For a surjection mu : L -> D with kernel in Ann(L): x o l = y o l for any
/// pre-image y of x. Throws InvalidAction if the choice matters.
Action action_from_surjection(const AlgebraMorphism &mu);

// ---------------------------------------------------------------- crossed

/// Flavor check of mu : L -> D with the given action: action valid, mu a
/// morphism, equivariance mu(x o l) = x o mu(l), mu(l o x) = mu(l) o x, and
/// the Peiffer identities mu(l) o l' = l o l' = l o mu(l').
Report check_crossed(const Matrix &mu, const Action &act);

class CrossedModule {
public:
  /// Verifies check_crossed (Errc::InvalidCrossedModule) and then runs the
  /// structural lemma checks as a post-condition (Errc::LemmaViolation).
  static CrossedModule make(Matrix mu, Action act);

  Flavor flavor() const noexcept { return act_.flavor(); }
  Field field() const noexcept { return act_.actor.field(); }
  const Algebra &source() const noexcept { return act_.actee; }
  const Algebra &target() const noexcept { return act_.actor; }
  const Matrix &mu() const noexcept { return mu_; }
  const Action &action() const noexcept { return act_; }
  AlgebraMorphism mu_morphism() const { return AlgebraMorphism{source(), target(), mu_}; }

  friend bool operator==(const CrossedModule &a, const CrossedModule &b) {
    return a.mu_ == b.mu_ && a.act_ == b.act_;
  }

private:
  CrossedModule(Matrix mu, Action act) : mu_(std::move(mu)), act_(std::move(act)) {}
  Matrix mu_;
  Action act_;
};

/// Ker mu inside Ann(L); Im mu an ideal; Im mu acting trivially on Ann(L);
/// the induced action of D/Im mu on the abelian Ker mu valid.
Report lemma_crossed_checks(const Matrix &mu, const Action &act);

struct LemmaCounters {
  std::uint64_t runs = 0;
  std::uint64_t failures = 0;
};
/// Totals over every CrossedModule::make in this process.
LemmaCounters lemma_counters();

struct XmodMorphism {
  CrossedModule source, target;
  Matrix alpha; // L -> L'
  Matrix beta;  // D -> D'
};

/// alpha, beta morphisms; mu' alpha = beta mu; alpha(x o l) = beta(x) o alpha(l)
/// and alpha(l o x) = alpha(l) o beta(x).
Report check_xmod_morphism(const CrossedModule &s, const CrossedModule &t, const Matrix &alpha,
                           const Matrix &beta);
/// Morphism with both components invertible.
bool is_xmod_isomorphism(const CrossedModule &s, const CrossedModule &t, const Matrix &alpha,
                         const Matrix &beta);

/// The three maps (mu,id) : L|xD -> D|xD, (id,mu) : L|xL -> L|xD and
/// (l,x) |-> (-l, mu(l)+x) on L|xD, each checked as an algebra morphism.
Report semidirect_homomorphism_checks(const Matrix &mu, const Action &act);

/// J0(A) = (0 -> A) and J1(A) = (A -id-> A) in the crossed modules of A's flavor.
CrossedModule embed_zero(const Algebra &a);
CrossedModule embed_identity(const Algebra &a);
/// Upsilon0 = D / mu(L), Upsilon1 = D, Upsilon2 = L.
QuotientAlgebra cokernel(const CrossedModule &x);

} // namespace diacat

#endif
