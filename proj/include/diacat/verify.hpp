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
// Verification batteries: commutative squares, adjunction bijections, the
// parallelepiped of crossed-module functors and the cat1 equivalences.

#ifndef DIACAT_VERIFY_HPP
#define DIACAT_VERIFY_HPP

#include <string>
#include <variant>
#include <vector>

#include "diacat/functors.hpp"
#include "diacat/homs.hpp"

namespace diacat {

enum class Verdict { Equal, Isomorphic, Fail };
const char *verdict_name(Verdict v);

/// Categories a square can start from.
enum class Category { Dias, Lb, As, Lie, XDias, XLb, XAs, XLie };
const char *category_name(Category c);

using SquareInput = std::variant<Algebra, CrossedModule>;
Category category_of(const SquareInput &in);

struct SquareInfo {
  std::string id;
  Category source;
  Verdict expected;
  std::string description;
};

/// Fixed registry of squares, in a stable order.
const std::vector<SquareInfo> &square_registry();
/// Throws Errc::UnknownName.
const SquareInfo &square_info(const std::string &id);

struct SquareResult {
  std::string id;
  Verdict expected = Verdict::Equal;
  Verdict got = Verdict::Fail;
  Report report;
  /// EQUAL always passes; ISOMORPHIC passes where an isomorphism is expected.
  bool passed() const noexcept {
    return got == Verdict::Equal || (got == Verdict::Isomorphic && expected == Verdict::Isomorphic);
  }
};

/// Computes both composites on `in` (truncation n for envelope squares).
/// Throws Errc::FlavorMismatch when `in` is not in the square's source category.
SquareResult check_square(const std::string &id, const SquareInput &in, std::size_t n);

struct BijectionReport {
  std::string name;
  std::size_t left = 0, right = 0; // |Hom| on each side
  Report report;
  bool ok() const noexcept { return report.ok(); }
};

/// Hom(Ud(g), d) -> Hom(g, LB(d)), f |-> f eta, against both enumerations.
/// Also covers U -| Liea for a Lie g and associative d.
BijectionReport verify_adjunction_ud(const Algebra &g, const Algebra &d, std::size_t n);
/// Hom(XUd(x), y) -> Hom(x, XLB(y)) through the unit, inverse by transposition.
/// Also covers XU -| XLiea.
BijectionReport verify_adjunction_xud(const CrossedModule &x, const CrossedModule &y,
                                      std::size_t n);
/// Level i in {0,1}: Upsilon_i -| J_i and J_i -| Upsilon_{i+1} (or the
/// Gamma / I analogs, by flavor) with explicit bijections and naturality in
/// both variables.
BijectionReport verify_adjunction_chain(int i, const CrossedModule &x, const Algebra &a);

struct FaceReport {
  std::vector<SquareResult> faces;
  bool ok() const noexcept {
    for (const auto &f : faces)
      if (!f.passed())
        return false;
    return true;
  }
};

/// All faces for i = 0, 1 on inputs derived from x. Lie crossed modules enter
/// through the inclusion and dialgebra ones through XLB.
FaceReport check_parallelepiped(const CrossedModule &x, std::size_t n);

/// phi(to_cat1(x)) = x and psi(to_internal(x)) = x with identity witnesses.
Report verify_xmod_roundtrip(const CrossedModule &x);
/// to_cat1(phi(c)) ~ c and to_internal(psi(c)) ~ c with the canonical witness.
Report verify_cat1_roundtrip(const Cat1Object &c);

/// Cat1 morphism whose E-component also commutes with the compositions.
Report check_internal_morphism(const InternalCategory &a, const InternalCategory &b,
                               const Matrix &f, const Matrix &g);

} // namespace diacat

#endif
