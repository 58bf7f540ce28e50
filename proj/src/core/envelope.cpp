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

#include "diacat/envelope.hpp"

#include <algorithm>
#include <map>

#include "diacat/error.hpp"
#include "diacat/limits.hpp"

namespace diacat {

bool word_less(const Word &a, const Word &b) {
  if (a.length() != b.length())
    return a.length() < b.length();
  if (a.letters != b.letters)
    return a.letters < b.letters;
  return a.center < b.center;
}

namespace {

// every letter string of length l in lexicographic order
std::vector<std::vector<std::uint32_t>> strings_of_length(std::size_t g, std::size_t l) {
  std::vector<std::vector<std::uint32_t>> out;
  if (g == 0)
    return out;
  std::vector<std::uint32_t> cur(l, 0);
  for (;;) {
    out.push_back(cur);
    std::size_t k = l;
    while (k > 0 && cur[k - 1] + 1 == g) {
      cur[k - 1] = 0;
      --k;
    }
    if (k == 0)
      break;
    ++cur[k - 1];
  }
  return out;
}

std::size_t checked_word_count(Field f, std::size_t g, std::size_t n, bool dias) {
  if (n == 0)
    fail(Errc::DimensionMismatch, "free objects need N >= 1");
  if (g == 0)
    return 0;
  std::size_t total = 0, power = 1, cap = max_dim(f);
  for (std::size_t l = 1; l <= n; ++l) {
    if (power > cap / g + 1)
      fail(Errc::ResourceCap, "free object on " + std::to_string(g) +
                                  " generators at N = " + std::to_string(n) +
                                  " exceeds the dimension cap " + std::to_string(cap));
    power *= g;
    total += dias ? l * power : power;
    if (total > cap)
      break;
  }
  require_dim(f, total, dias ? "free dialgebra" : "tensor algebra");
  return total;
}

using WordIndex = std::map<std::pair<std::vector<std::uint32_t>, std::size_t>, std::size_t>;

WordIndex index_words(const std::vector<Word> &words) {
  WordIndex idx;
  for (std::size_t i = 0; i < words.size(); ++i)
    idx[{words[i].letters, words[i].center}] = i;
  return idx;
}

std::vector<std::string> word_labels(const std::vector<Word> &words, std::size_t g,
                                     const std::vector<std::string> &gen, bool dias) {
  std::vector<std::string> names = gen;
  if (names.size() != g) {
    names.clear();
    for (std::size_t i = 0; i < g; ++i)
      names.push_back("x" + std::to_string(i));
  }
  bool spaced = std::any_of(names.begin(), names.end(), [](auto &s) { return s.size() != 1; });
  std::vector<std::string> out;
  for (const auto &w : words) {
    std::string s;
    for (std::size_t i = 0; i < w.length(); ++i) {
      if (spaced && i > 0)
        s += ' ';
      if (dias && i == w.center)
        s += "[" + names[w.letters[i]] + "]";
      else
        s += names[w.letters[i]];
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::uint32_t> concat(const std::vector<std::uint32_t> &a,
                                  const std::vector<std::uint32_t> &b) {
  auto r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Matrix letter_columns(const Matrix &projection, std::size_t g) {
  Matrix eta(projection.field(), projection.rows(), g);
  for (std::size_t r = 0; r < projection.rows(); ++r)
    for (std::size_t c = 0; c < g; ++c)
      eta(r, c) = projection(r, c);
  return eta;
}

} // namespace

std::vector<Word> dialgebra_words(std::size_t g, std::size_t n) {
  std::vector<Word> out;
  for (std::size_t l = 1; l <= n; ++l)
    for (auto &s : strings_of_length(g, l))
      for (std::size_t c = 0; c < l; ++c)
        out.push_back(Word{s, c});
  return out;
}

std::vector<Word> tensor_words(std::size_t g, std::size_t n) {
  std::vector<Word> out;
  for (std::size_t l = 1; l <= n; ++l)
    for (auto &s : strings_of_length(g, l))
      out.push_back(Word{std::move(s), 0});
  return out;
}

Algebra free_dialgebra(Field f, std::size_t g, std::size_t n,
                       const std::vector<std::string> &generator_labels) {
  std::size_t dim = checked_word_count(f, g, n, true);
  auto words = dialgebra_words(g, n);
  auto idx = index_words(words);
  Bilinear left(f, dim), right(f, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Word &u = words[i], &w = words[j];
      if (u.length() + w.length() > n)
        continue;
      auto letters = concat(u.letters, w.letters);
      left.at(i, j) = Vector::unit(f, dim, idx.at({letters, u.center}));
      right.at(i, j) = Vector::unit(f, dim, idx.at({letters, u.length() + w.center}));
    }
  return Algebra::make(Flavor::Dias, f, dim, {std::move(left), std::move(right)},
                       word_labels(words, g, generator_labels, true));
}

Algebra tensor_algebra(Field f, std::size_t g, std::size_t n,
                       const std::vector<std::string> &generator_labels) {
  std::size_t dim = checked_word_count(f, g, n, false);
  auto words = tensor_words(g, n);
  auto idx = index_words(words);
  Bilinear prod(f, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (words[i].length() + words[j].length() <= n)
        prod.at(i, j) = Vector::unit(f, dim, idx.at({concat(words[i].letters, words[j].letters), 0}));
  return Algebra::make(Flavor::Assoc, f, dim, {std::move(prod)},
                       word_labels(words, g, generator_labels, false));
}

Envelope ud(const Algebra &g, std::size_t n) {
  require_flavor(g, Flavor::Leibniz, "Ud");
  require_valid(g, "Ud");
  Field f = g.field();
  auto free = free_dialgebra(f, g.dim(), n, g.labels());
  auto words = dialgebra_words(g.dim(), n);
  std::vector<Vector> seed;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      Vector r(f, free.dim());
      const Vector &br = g.product().at(i, j);
      for (std::size_t k = 0; k < g.dim(); ++k)
        r[k] = br[k];
      r -= free.product(0).at(i, j);
      r += free.product(1).at(j, i);
      seed.push_back(std::move(r));
    }
  auto rel = ideal_closure(free, Subspace::span(f, free.dim(), seed));
  auto q = quotient_algebra(free, rel);
  Matrix eta = letter_columns(q.projection, g.dim());
  return Envelope{g, n, std::move(free), std::move(words), std::move(rel), std::move(q),
                  std::move(eta)};
}

Envelope u_lie(const Algebra &p, std::size_t n) {
  require_flavor(p, Flavor::Lie, "U");
  require_valid(p, "U");
  Field f = p.field();
  auto free = tensor_algebra(f, p.dim(), n, p.labels());
  auto words = tensor_words(p.dim(), n);
  std::vector<Vector> seed;
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j) {
      Vector r = free.product().at(i, j) - free.product().at(j, i);
      const Vector &br = p.product().at(i, j);
      for (std::size_t k = 0; k < p.dim(); ++k)
        r[k] -= br[k];
      seed.push_back(std::move(r));
    }
  auto rel = ideal_closure(free, Subspace::span(f, free.dim(), seed));
  auto q = quotient_algebra(free, rel);
  Matrix eta = letter_columns(q.projection, p.dim());
  return Envelope{p, n, std::move(free), std::move(words), std::move(rel), std::move(q),
                  std::move(eta)};
}

Matrix extend(const Envelope &env, const Algebra &target, const Matrix &images) {
  Flavor want = env.free.flavor();
  if (target.flavor() != want)
    fail(Errc::FlavorMismatch, std::string("envelope maps into ") + flavor_name(want) +
                                   " algebras, got " + flavor_name(target.flavor()));
  if (images.rows() != target.dim() || images.cols() != env.source.dim())
    fail(Errc::DimensionMismatch, "generator images have the wrong shape");
  bool dias = want == Flavor::Dias;
  auto idx = index_words(env.words);
  Matrix onfree(target.field(), target.dim(), env.free.dim());
  // x_{-n} |- ( ... |- ((x_0 -| x_1) -| x_2) ...) evaluated through shorter words
  for (std::size_t i = 0; i < env.words.size(); ++i) {
    const Word &w = env.words[i];
    Vector img;
    if (w.length() == 1) {
      img = images.column(w.letters[0]);
    } else if (dias && w.center > 0) {
      Word rest{std::vector<std::uint32_t>(w.letters.begin() + 1, w.letters.end()), w.center - 1};
      img = target.mul(1, images.column(w.letters[0]), onfree.column(idx.at({rest.letters, rest.center})));
    } else {
      std::vector<std::uint32_t> rest(w.letters.begin(), w.letters.end() - 1);
      img = target.mul(0, onfree.column(idx.at({rest, w.center})), images.column(w.letters.back()));
    }
    onfree.set_column(i, img);
  }
  for (const auto &r : env.relations.basis())
    if (!onfree.apply(r).is_zero())
      fail(Errc::NotAMorphism, "generator images do not respect the defining relations");
  Matrix m = onfree * env.quotient.lift();
  auto rep = check_morphism(env.algebra(), target, m);
  if (!rep.ok())
    fail(Errc::NotAMorphism, "extension is not a morphism (" + rep.summary() + ")");
  return m;
}

Matrix envelope_map(const Envelope &from, const Envelope &to, const Matrix &f) {
  return extend(from, to.algebra(), to.eta * f);
}

// ---------------------------------------------------------------- XUd / XU

namespace {

XEnvelope build_xenvelope(const CrossedModule &x, std::size_t n, bool dias) {
  Cat1Object c = to_cat1(x);
  Envelope ee = dias ? ud(c.E, n) : u_lie(c.E, n);
  Envelope ed = dias ? ud(c.D, n) : u_lie(c.D, n);
  Matrix us = envelope_map(ee, ed, c.s);
  Matrix ut = envelope_map(ee, ed, c.t);
  Matrix ui = envelope_map(ed, ee, c.incl);
  const Algebra &ue = ee.algebra();

  Subspace ks = kernel(us), kt = kernel(ut);
  std::vector<Vector> gens;
  for (std::size_t op = 0; op < ue.ops(); ++op)
    for (const auto &u : ks.basis())
      for (const auto &v : kt.basis()) {
        gens.push_back(ue.mul(op, u, v));
        gens.push_back(ue.mul(op, v, u));
      }
  Subspace sum = Subspace::span(ue.field(), ue.dim(), gens);
  Subspace xi = ideal_closure(ue, sum);
  bool grew = xi.dim() != sum.dim();

  auto q = quotient_algebra(ue, xi);
  Matrix lift = q.lift();
  Cat1Object out{q.algebra, ed.algebra(), q.projection * ui, us * lift, ut * lift};
  auto rep = check_cat1(out);
  if (!rep.ok())
    fail(Errc::InvalidCat1, "quotient by X is not a cat1-object: " + rep.summary());
  auto ker = subalgebra(out.E, kernel(out.s));
  CrossedModule output = phi(out);
  return XEnvelope{x,  n,  std::move(c), std::move(ee), std::move(ed), std::move(us),
                   std::move(ut), std::move(ui), std::move(xi), grew, std::move(q),
                   std::move(out), std::move(ker), std::move(output)};
}

} // namespace

XEnvelope xud(const CrossedModule &x, std::size_t n) {
  if (x.flavor() != Flavor::Leibniz)
    fail(Errc::FlavorMismatch, "XUd takes a Leibniz crossed module");
  return build_xenvelope(x, n, true);
}

XEnvelope xu(const CrossedModule &x, std::size_t n) {
  if (x.flavor() != Flavor::Lie)
    fail(Errc::FlavorMismatch, "XU takes a Lie crossed module");
  return build_xenvelope(x, n, false);
}

XEnvelope xenvelope(const CrossedModule &x, std::size_t n) {
  return x.flavor() == Flavor::Lie ? xu(x, n) : xud(x, n);
}

XmodPair xenv_unit(const XEnvelope &xe) {
  Field f = xe.input.field();
  std::size_t l = xe.input.source().dim(), e = xe.cat1_in.E.dim();
  Matrix inj(f, e, l);
  for (std::size_t i = 0; i < l; ++i)
    inj(i, i) = Scalar::one(f);
  Matrix alpha = xe.ker_s.coordinates * xe.q.projection * xe.env_e.eta * inj;
  return XmodPair{std::move(alpha), xe.env_d.eta};
}

XmodPair xenv_transpose(const XEnvelope &xe, const CrossedModule &y, const XmodPair &fp) {
  auto sd = semidirect_product(y.action());
  Matrix onE = Matrix::block_diagonal(fp.alpha, fp.beta);
  Matrix psi = extend(xe.env_e, sd.algebra, onE);
  for (const auto &v : xe.x.basis())
    if (!psi.apply(v).is_zero())
      fail(Errc::NotAMorphism, "induced map does not vanish on X");
  Matrix full = psi * xe.q.lift() * xe.ker_s.inclusion;
  std::size_t ly = y.source().dim();
  Matrix alpha(y.field(), ly, full.cols());
  for (std::size_t r = 0; r < full.rows(); ++r)
    for (std::size_t c = 0; c < full.cols(); ++c) {
      if (r < ly)
        alpha(r, c) = full(r, c);
      else if (!full(r, c).is_zero())
        fail(Errc::NotAMorphism, "induced map leaves the kernel of s");
    }
  Matrix beta = extend(xe.env_d, y.target(), fp.beta);
  return XmodPair{std::move(alpha), std::move(beta)};
}

XmodPair xenv_untranspose(const XEnvelope &xe, const XmodPair &g) {
  auto unit = xenv_unit(xe);
  return XmodPair{g.alpha * unit.alpha, g.beta * unit.beta};
}

XmodPair xenv_map(const XEnvelope &from, const XEnvelope &to, const XmodPair &f) {
  auto unit = xenv_unit(to);
  return xenv_transpose(from, to.output, XmodPair{unit.alpha * f.alpha, unit.beta * f.beta});
}

} // namespace diacat
