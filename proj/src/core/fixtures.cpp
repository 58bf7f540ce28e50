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

#include "diacat/fixtures.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "diacat/envelope.hpp"
#include "diacat/error.hpp"

namespace diacat {

namespace {

const Field F2 = Field::prime(2);
const Field QQ = Field::rationals();

struct Entry {
  std::string kind, note;
  std::function<Object()> build;
};

// (i, j, k, c): b_i o b_j gets c b_k
using Triples = std::vector<std::array<long, 4>>;

Bilinear tensor(Field f, std::size_t n, const Triples &ts) {
  Bilinear t(f, n);
  for (auto [i, j, k, c] : ts)
    t.at(i, j)[k] += Scalar::from_int(f, c);
  return t;
}

Algebra ffe() {
  // basis e, f; [f,f] = e
  return Algebra::make(Flavor::Leibniz, F2, 2, {tensor(F2, 2, {{1, 1, 0, 1}})}, {"e", "f"});
}

Algebra as_xxy(Field f) {
  return Algebra::make(Flavor::Assoc, f, 2, {tensor(f, 2, {{0, 0, 1, 1}})}, {"x", "y"});
}

Algebra dias_unit() {
  Bilinear t = tensor(F2, 1, {{0, 0, 0, 1}});
  return Algebra::make(Flavor::Dias, F2, 1, {t, t}, {"e"});
}

XmodData data(const CrossedModule &x) { return XmodData{x.mu(), x.action()}; }

CrossedModule ideal_inclusion(const Algebra &d, const std::vector<Vector> &gens) {
  Subalgebra sub = subalgebra(d, Subspace::span(d.field(), d.dim(), gens));
  Action act = action_by_ambient(d, Matrix::identity(d.field(), d.dim()), d, sub);
  return CrossedModule::make(sub.inclusion, act);
}

CrossedModule free_ideal() {
  Algebra fd = free_dialgebra(F2, 1, 2);
  std::vector<Vector> top;
  for (std::size_t i = 1; i < fd.dim(); ++i)
    top.push_back(fd.basis(i));
  return ideal_inclusion(fd, top);
}

const std::map<std::string, Entry> &table() {
  static const std::map<std::string, Entry> t = [] {
    std::map<std::string, Entry> m;
    auto add = [&](std::string name, std::string kind, std::string note,
                   std::function<Object()> build) {
      m.emplace(std::move(name), Entry{std::move(kind), std::move(note), std::move(build)});
    };

    add("dias-abelian-2", "algebra", "dialgebra of dimension 2 over Q, both products zero",
        [] { return Algebra::abelian(Flavor::Dias, QQ, 2); });
    add("dias-unit-1", "algebra", "dialgebra over F2 on e with e-|e = e|-e = e",
        [] { return dias_unit(); });
    add("dias-bad-1", "algebra",
        "e-|e = e, e|-e = 0 over F2; fails the axiom (x-|y)-|z = x-|(y|-z)", [] {
          return Algebra::unchecked(Flavor::Dias, F2, 1,
                                    {tensor(F2, 1, {{0, 0, 0, 1}}), Bilinear(F2, 1)}, {"e"});
        });
    add("free-dias-1-2", "algebra",
        "free dialgebra on one generator truncated at length 2 over F2 (dimension 3)",
        [] { return free_dialgebra(F2, 1, 2); });
    add("as-xx-y", "algebra", "associative algebra over Q on x, y with x*x = y, all else zero",
        [] { return as_xxy(QQ); });
    add("as-xx-y-f2", "algebra", "x*x = y over F2", [] { return as_xxy(F2); });
    add("leibniz-ff-e", "algebra", "Leibniz algebra over F2 on e, f with [f,f] = e",
        [] { return ffe(); });
    add("leibniz-abelian-1", "algebra", "one-dimensional abelian Leibniz algebra over F2",
        [] { return Algebra::abelian(Flavor::Leibniz, F2, 1); });
    add("lie-abelian-1", "algebra", "one-dimensional abelian Lie algebra over F2",
        [] { return Algebra::abelian(Flavor::Lie, F2, 1); });
    add("lie-heis-3", "algebra", "Heisenberg Lie algebra over Q: [x,y] = z = -[y,x]", [] {
      return Algebra::make(Flavor::Lie, QQ, 3, {tensor(QQ, 3, {{0, 1, 2, 1}, {1, 0, 2, -1}})},
                           {"x", "y", "z"});
    });

    add("xdias-zero", "xmod", "0 -> 0 over F2",
        [] { return data(embed_zero(Algebra::abelian(Flavor::Dias, F2, 0))); });
    add("xdias-id-unit", "xmod", "identity crossed module on dias-unit-1",
        [] { return data(embed_identity(dias_unit())); });
    add("xdias-ideal-free", "xmod",
        "inclusion of the length-2 words into free-dias-1-2, acting by products",
        [] { return data(free_ideal()); });
    add("xdias-bimodule", "xmod",
        "zero map from the abelian line to dias-unit-1, both acting by the identity", [] {
          Algebra d = dias_unit();
          Algebra l = Algebra::abelian(Flavor::Dias, F2, 1);
          Bilinear one = tensor(F2, 1, {{0, 0, 0, 1}});
          Action act{d, l, {one, one}, {one, one}};
          return data(CrossedModule::make(Matrix(F2, 1, 1), act));
        });
    add("xdias-ideal-q", "xmod", "span{y} inside the dialgebra of x*x = y over Q", [] {
      Algebra d = dias_of_as(as_xxy(QQ));
      return data(ideal_inclusion(d, {d.basis(1)}));
    });
    add("xlb-zero", "xmod", "0 -> leibniz-ff-e",
        [] { return data(embed_zero(ffe())); });
    add("xlb-id", "xmod", "identity crossed module on leibniz-ff-e",
        [] { return data(embed_identity(ffe())); });
    add("xlb-ideal", "xmod", "span{e} inside leibniz-ff-e, acting by the bracket", [] {
      Algebra g = ffe();
      return data(ideal_inclusion(g, {g.basis(0)}));
    });
    add("xlie-trivial", "xmod", "zero map between abelian Lie lines over F2, trivial action", [] {
      Algebra a = Algebra::abelian(Flavor::Lie, F2, 1);
      return data(CrossedModule::make(Matrix(F2, 1, 1), Action::trivial(a, a)));
    });
    add("xas-ideal", "xmod", "span{y} inside as-xx-y over Q", [] {
      Algebra a = as_xxy(QQ);
      return data(ideal_inclusion(a, {a.basis(1)}));
    });
    add("xas-id", "xmod", "identity crossed module on x*x = y over F2",
        [] { return data(embed_identity(as_xxy(F2))); });

    add("cat1-trivial", "cat1", "cat1 object of xdias-id-unit",
        [] { return to_cat1(embed_identity(dias_unit())); });
    add("cat1-ideal", "cat1", "cat1 object of xdias-ideal-free",
        [] { return to_cat1(free_ideal()); });
    add("cat1-lb-id", "cat1", "cat1 object of xlb-id",
        [] { return to_cat1(embed_identity(ffe())); });
    add("internal-ideal", "internal", "internal category of xdias-ideal-free",
        [] { return to_internal(free_ideal()); });
    return m;
  }();
  return t;
}

const Entry &lookup(const std::string &name) {
  auto it = table().find(name);
  if (it == table().end())
    fail(Errc::UnknownName, "no fixture named \"" + name + "\"");
  return it->second;
}

const Entry &lookup(const std::string &name, const char *kind) {
  const Entry &e = lookup(name);
  if (e.kind != kind)
    fail(Errc::UnknownName, "fixture \"" + name + "\" is a " + e.kind + ", not a " + kind);
  return e;
}

} // namespace

const std::vector<FixtureInfo> &fixture_registry() {
  static const std::vector<FixtureInfo> r = [] {
    std::vector<FixtureInfo> v;
    for (const auto &[name, e] : table())
      v.push_back({name, e.kind, e.note});
    return v;
  }();
  return r;
}

std::vector<std::string> fixture_names(const std::string &kind) {
  std::vector<std::string> out;
  for (const auto &f : fixture_registry())
    if (kind.empty() || f.kind == kind)
      out.push_back(f.name);
  return out;
}

Object fixture_object(const std::string &name) { return lookup(name).build(); }

Algebra fixture_algebra(const std::string &name) {
  return std::get<Algebra>(lookup(name, "algebra").build());
}

CrossedModule fixture_xmod(const std::string &name) {
  auto d = std::get<XmodData>(lookup(name, "xmod").build());
  return CrossedModule::make(d.mu, d.action);
}

Cat1Object fixture_cat1(const std::string &name) {
  return std::get<Cat1Object>(lookup(name, "cat1").build());
}

InternalCategory fixture_internal(const std::string &name) {
  return std::get<InternalCategory>(lookup(name, "internal").build());
}

} // namespace diacat
