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

#include "diacat/homs.hpp"

#include <algorithm>
#include <functional>

#include "diacat/error.hpp"

namespace diacat {

namespace {

using Columns = std::vector<Vector>;
using Constraint = std::function<bool(const Columns &)>;

class Search {
public:
  Search(Field f, std::vector<std::size_t> heights, std::uint64_t budget)
      : f_(f), heights_(std::move(heights)), at_(heights_.size()), budget_(budget) {
    if (!f.is_finite())
      fail(Errc::NotFinite, "hom enumeration needs a finite field");
  }

  /// Registers c to be tested once every column in `uses` is assigned.
  void require(const std::vector<std::size_t> &uses, Constraint c) {
    std::size_t last = 0;
    for (auto u : uses)
      last = std::max(last, u);
    if (heights_.empty())
      return;
    at_[last].push_back(std::move(c));
  }

  std::vector<Columns> run() {
    std::vector<Columns> found;
    Columns cols;
    for (auto h : heights_)
      cols.emplace_back(f_, h);
    recurse(0, cols, found);
    return found;
  }

private:
  void recurse(std::size_t k, Columns &cols, std::vector<Columns> &found) {
    if (k == heights_.size()) {
      found.push_back(cols);
      return;
    }
    std::uint64_t p = f_.characteristic();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < heights_[k]; ++i)
      count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      if (++visited_ > budget_)
        too_large();
      std::uint64_t c = code;
      // most significant digit first keeps the order lexicographic
      for (std::size_t i = heights_[k]; i-- > 0;) {
        cols[k][i] = Scalar::from_int(f_, static_cast<long>(c % p));
        c /= p;
      }
      bool ok = true;
      for (const auto &check : at_[k])
        if (!check(cols)) {
          ok = false;
          break;
        }
      if (ok)
        recurse(k + 1, cols, found);
    }
  }

  [[noreturn]] void too_large() const {
    std::size_t digits = 0;
    for (auto h : heights_)
      digits += h;
    fail(Errc::SearchSpaceTooLarge,
         "hom search exceeded " + std::to_string(budget_) + " visited candidates; the naive space has " +
             std::to_string(f_.characteristic()) + "^" + std::to_string(digits) + " elements");
  }

  Field f_;
  std::vector<std::size_t> heights_;
  std::vector<std::vector<Constraint>> at_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
};

std::vector<std::size_t> support(const Vector &v, std::size_t offset) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero())
      s.push_back(offset + i);
  return s;
}

// sum_k v_k cols[offset + k]
Vector combine(const Vector &v, const Columns &cols, std::size_t offset, Field f, std::size_t h) {
  Vector out(f, h);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero())
      out.axpy(v[k], cols[offset + k]);
  return out;
}

// f(a_i o a_j) = f(a_i) o f(a_j) for the block of columns starting at offset
void morphism_constraints(Search &s, const Algebra &a, const Algebra &b, std::size_t offset) {
  Field f = a.field();
  std::size_t h = b.dim();
  for (std::size_t op = 0; op < a.ops(); ++op)
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) {
        const Vector &prod = a.product(op).at(i, j);
        auto uses = support(prod, offset);
        uses.push_back(offset + i);
        uses.push_back(offset + j);
        s.require(uses, [=, &b](const Columns &c) {
          return combine(prod, c, offset, f, h) == b.mul(op, c[offset + i], c[offset + j]);
        });
      }
}

Matrix block(const Columns &cols, std::size_t offset, std::size_t count, Field f, std::size_t h) {
  Matrix m(f, h, count);
  for (std::size_t k = 0; k < count; ++k)
    m.set_column(k, cols[offset + k]);
  return m;
}

void require_same(const Algebra &a, const Algebra &b) {
  if (a.flavor() != b.flavor())
    fail(Errc::FlavorMismatch, "hom-set between algebras of different flavors");
  if (a.field() != b.field())
    fail(Errc::FieldMismatch, "hom-set between algebras over different fields");
}

} // namespace

std::vector<Matrix> enumerate_homs(const Algebra &a, const Algebra &b, std::uint64_t budget) {
  require_same(a, b);
  Search s(a.field(), std::vector<std::size_t>(a.dim(), b.dim()), budget);
  morphism_constraints(s, a, b, 0);
  std::vector<Matrix> out;
  for (const auto &cols : s.run())
    out.push_back(block(cols, 0, a.dim(), a.field(), b.dim()));
  if (a.dim() == 0)
    out.assign(1, Matrix(a.field(), b.dim(), 0));
  return out;
}

std::vector<XmodPair> enumerate_xmod_homs(const CrossedModule &x, const CrossedModule &y,
                                          std::uint64_t budget) {
  if (x.flavor() != y.flavor())
    fail(Errc::FlavorMismatch, "hom-set between crossed modules of different flavors");
  require_same(x.target(), y.target());
  const Algebra &l = x.source(), &d = x.target(), &l2 = y.source(), &d2 = y.target();
  Field f = x.field();
  std::size_t nd = d.dim(), nl = l.dim();
  std::vector<std::size_t> heights(nd, d2.dim());
  heights.insert(heights.end(), nl, l2.dim());
  Search s(f, heights, budget);
  morphism_constraints(s, d, d2, 0);
  morphism_constraints(s, l, l2, nd);

  // mu' alpha = beta mu
  const Matrix &mu = x.mu(), &mu2 = y.mu();
  for (std::size_t j = 0; j < nl; ++j) {
    Vector col = mu.column(j);
    auto uses = support(col, 0);
    uses.push_back(nd + j);
    s.require(uses, [=, &mu2, &d2](const Columns &c) {
      return mu2.apply(c[nd + j]) == combine(col, c, 0, f, d2.dim());
    });
  }
  // alpha(x o l) = beta(x) o alpha(l), alpha(l o x) = alpha(l) o beta(x)
  const Action &a = x.action(), &a2 = y.action();
  for (std::size_t op = 0; op < a.left.size(); ++op)
    for (std::size_t i = 0; i < nd; ++i)
      for (std::size_t j = 0; j < nl; ++j) {
        Vector lv = a.left[op].at(i, j), rv = a.right[op].at(j, i);
        auto ul = support(lv, nd), ur = support(rv, nd);
        ul.push_back(i);
        ul.push_back(nd + j);
        ur.push_back(i);
        ur.push_back(nd + j);
        s.require(ul, [=, &a2, &l2](const Columns &c) {
          return combine(lv, c, nd, f, l2.dim()) == a2.left[op].apply(c[i], c[nd + j]);
        });
        s.require(ur, [=, &a2, &l2](const Columns &c) {
          return combine(rv, c, nd, f, l2.dim()) == a2.right[op].apply(c[nd + j], c[i]);
        });
      }

  std::vector<XmodPair> out;
  if (nd + nl == 0) {
    out.push_back(XmodPair{Matrix(f, l2.dim(), 0), Matrix(f, d2.dim(), 0)});
    return out;
  }
  for (const auto &cols : s.run())
    out.push_back(XmodPair{block(cols, nd, nl, f, l2.dim()), block(cols, 0, nd, f, d2.dim())});
  return out;
}

std::optional<Matrix> find_algebra_isomorphism(const Algebra &a, const Algebra &b,
                                               std::uint64_t budget) {
  if (a.dim() != b.dim())
    return std::nullopt;
  Matrix inv;
  for (auto &m : enumerate_homs(a, b, budget))
    if (invert(m, inv))
      return m;
  return std::nullopt;
}

std::optional<XmodPair> find_xmod_isomorphism(const CrossedModule &x, const CrossedModule &y,
                                              std::uint64_t budget) {
  if (x.source().dim() != y.source().dim() || x.target().dim() != y.target().dim())
    return std::nullopt;
  Matrix inv;
  for (auto &p : enumerate_xmod_homs(x, y, budget))
    if (invert(p.alpha, inv) && invert(p.beta, inv))
      return p;
  return std::nullopt;
}

} // namespace diacat
