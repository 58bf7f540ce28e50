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
// Truncated free dialgebras and tensor algebras, the enveloping functors Ud
// and U, and their crossed-module liftings XUd and XU.

#ifndef DIACAT_ENVELOPE_HPP
#define DIACAT_ENVELOPE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "diacat/cat1.hpp"

namespace diacat {

/// A basis word. For dialgebras letters[center] is the middle letter; tensor
/// words leave center at 0.
struct Word {
  std::vector<std::uint32_t> letters;
  std::size_t center = 0;

  std::size_t length() const noexcept { return letters.size(); }
  friend bool operator==(const Word &, const Word &) = default;
};

/// Order of basis words: by length, then by letter string, then by center.
bool word_less(const Word &a, const Word &b);

/// All dialgebra words of length <= n on g letters, in basis order.
/// Their count is the sum over l of l * g^l.
std::vector<Word> dialgebra_words(std::size_t g, std::size_t n);
/// All nonempty words of length <= n on g letters, in basis order.
std::vector<Word> tensor_words(std::size_t g, std::size_t n);

/// Free dialgebra on g generators with every product of total length > n set
/// to zero. u -| w keeps the center of u, u |- w takes the center of w.
Algebra free_dialgebra(Field f, std::size_t g, std::size_t n,
                       const std::vector<std::string> &generator_labels = {});
/// Nonempty tensor algebra truncated at length n, product = concatenation.
Algebra tensor_algebra(Field f, std::size_t g, std::size_t n,
                       const std::vector<std::string> &generator_labels = {});

/// Truncated enveloping algebra of a Leibniz (Ud) or Lie (U) algebra.
struct Envelope {
  Algebra source;         // g
  std::size_t trunc = 0;  // N
  Algebra free;           // free object on the underlying module of g
  std::vector<Word> words;
  Subspace relations;     // ideal of free
  QuotientAlgebra quotient;
  Matrix eta;             // dim U x dim g, b_i |-> class of the letter i

  const Algebra &algebra() const noexcept { return quotient.algebra; }
};

/// Ud(g) = free dialgebra / ([x,y] - x -| y + y |- x).
Envelope ud(const Algebra &g, std::size_t n);
/// U(p) = tensor algebra / (xy - yx - [x,y]).
Envelope u_lie(const Algebra &p, std::size_t n);

/// The unique morphism U -> target whose composite with eta is `images`
/// (dim target x dim g). Throws Errc::NotAMorphism when the relations are not
/// killed or the extension is not a morphism (for instance when target is
/// not nilpotent of class <= N).
Matrix extend(const Envelope &env, const Algebra &target, const Matrix &images);
/// U(f) : U(g) -> U(g') for a morphism f : g -> g'.
Matrix envelope_map(const Envelope &from, const Envelope &to, const Matrix &f);

/// A pair (alpha, beta) of crossed-module morphism components.
struct XmodPair {
  Matrix alpha, beta;
};

/// XUd for Leibniz input, XU for Lie input.
struct XEnvelope {
  CrossedModule input;
  std::size_t trunc = 0;
  Cat1Object cat1_in;     // to_cat1(input)
  Envelope env_e, env_d;  // U(E), U(D)
  Matrix us, ut, ui;      // U(s), U(t) : UE -> UD and U(incl) : UD -> UE
  Subspace x;             // the ideal X of UE
  bool x_needed_closure = false;
  QuotientAlgebra q;      // UE / X
  Cat1Object cat1_out;    // (UE/X, UD, s-bar, t-bar)
  Subalgebra ker_s;       // Ker s-bar, source of the output
  CrossedModule output;
};

XEnvelope xud(const CrossedModule &x, std::size_t n);
XEnvelope xu(const CrossedModule &x, std::size_t n);
/// Dispatches on the flavor of x.
XEnvelope xenvelope(const CrossedModule &x, std::size_t n);

/// Unit x -> XLB(XUd(x)), resp. x -> XLiea(XU(x)).
XmodPair xenv_unit(const XEnvelope &xe);
/// Turns (alpha, beta) : x -> XLB(y) into the morphism XUd(x) -> y with the
/// same composite with the unit. y is a dialgebra (resp. associative)
/// crossed module. Throws Errc::NotAMorphism when (alpha, beta) is not a
/// morphism of cat1-objects.
XmodPair xenv_transpose(const XEnvelope &xe, const CrossedModule &y, const XmodPair &f);
/// (A, B) : XUd(x) -> y |-> (A, B) composed with the unit.
XmodPair xenv_untranspose(const XEnvelope &xe, const XmodPair &g);
/// XUd (resp. XU) on a morphism f : from.input -> to.input.
XmodPair xenv_map(const XEnvelope &from, const XEnvelope &to, const XmodPair &f);

} // namespace diacat

#endif
