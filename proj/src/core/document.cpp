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

#include "diacat/document.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "diacat/error.hpp"

namespace diacat {

namespace {

[[noreturn]] void bad(const std::string &where, const std::string &msg) {
  fail(Errc::ParseError, (where.empty() ? std::string("/") : where) + ": " + msg);
}

const Json &member(const Json &j, const char *key, const std::string &where) {
  if (!j.contains(key))
    bad(where, std::string("missing key \"") + key + "\"");
  return j.at(key);
}

void only_keys(const Json &j, std::initializer_list<const char *> keys, const std::string &where) {
  if (!j.is_object())
    bad(where, "expected an object");
  std::set<std::string> allowed;
  for (auto k : keys)
    allowed.insert(k);
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      bad(where + "/" + it.key(), "unexpected key");
}

std::size_t as_index(const Json &j, const std::string &where) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    bad(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Scalar as_scalar(const Json &j, Field f, const std::string &where) {
  try {
    if (j.is_string())
      return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer())
      return Scalar::parse(f, std::to_string(j.get<long long>()));
  } catch (const Error &e) {
    bad(where, e.what());
  }
  bad(where, "expected a coefficient string such as \"3/7\"");
}

Field field_from(const Json &j, const std::string &where) {
  const Json &f = member(j, "field", where);
  if (!f.is_string())
    bad(where + "/field", "expected \"Q\" or \"Fp\"");
  auto name = f.get<std::string>();
  if (name == "Q") {
    if (j.contains("p"))
      bad(where + "/p", "\"p\" only applies to \"Fp\"");
    return Field::rationals();
  }
  if (name != "Fp")
    bad(where + "/field", "expected \"Q\" or \"Fp\", got \"" + name + "\"");
  std::size_t p = as_index(member(j, "p", where), where + "/p");
  try {
    return Field::prime(p);
  } catch (const Error &e) {
    bad(where + "/p", e.what());
  }
}

Flavor flavor_from(const Json &j, const std::string &where) {
  const Json &f = member(j, "flavor", where);
  if (!f.is_string())
    bad(where + "/flavor", "expected \"dias\", \"lb\", \"as\" or \"lie\"");
  try {
    return parse_flavor(f.get<std::string>());
  } catch (const Error &e) {
    bad(where + "/flavor", e.what());
  }
}

std::vector<const char *> product_keys(Flavor f) {
  switch (f) {
  case Flavor::Dias: return {"left", "right"};
  case Flavor::Leibniz:
  case Flavor::Lie: return {"bracket"};
  case Flavor::Assoc: return {"product"};
  }
  return {};
}

// sparse [i, j, k, "c"] list into a tensor; absent lists are zero
Bilinear tensor_from(const Json *list, Field f, std::size_t l, std::size_t r, std::size_t o,
                     const std::string &where) {
  Bilinear t(f, l, r, o);
  if (!list)
    return t;
  if (!list->is_array())
    bad(where, "expected a list of [i, j, k, coefficient] triples");
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t n = 0; n < list->size(); ++n) {
    std::string at = where + "/" + std::to_string(n);
    const Json &e = (*list)[n];
    if (!e.is_array() || e.size() != 4)
      bad(at, "expected [i, j, k, coefficient]");
    std::size_t i = as_index(e[0], at + "/0"), j = as_index(e[1], at + "/1"),
                k = as_index(e[2], at + "/2");
    if (i >= l)
      bad(at + "/0", "index " + std::to_string(i) + " out of range " + std::to_string(l));
    if (j >= r)
      bad(at + "/1", "index " + std::to_string(j) + " out of range " + std::to_string(r));
    if (k >= o)
      bad(at + "/2", "index " + std::to_string(k) + " out of range " + std::to_string(o));
    if (!seen.insert({i, j, k}).second)
      bad(at, "repeated entry");
    t.at(i, j)[k] = as_scalar(e[3], f, at + "/3");
  }
  return t;
}

Json tensor_to_json(const Bilinear &t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.left_dim(); ++i)
    for (std::size_t j = 0; j < t.right_dim(); ++j) {
      const Vector &v = t.at(i, j);
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero())
          out.push_back(Json::array({i, j, k, v[k].to_string()}));
    }
  return out;
}

const Json *optional(const Json &j, const char *key) {
  return j.contains(key) ? &j.at(key) : nullptr;
}

Matrix matrix_from(const Json &j, Field f, std::size_t rows, std::size_t cols,
                   const std::string &where) {
  if (!j.is_array() || j.size() != rows)
    bad(where, "expected " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::string at = where + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != cols)
      bad(at, "expected a row of " + std::to_string(cols) + " coefficients");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = as_scalar(j[r][c], f, at + "/" + std::to_string(c));
  }
  return m;
}

Json field_json(Field f) {
  Json j;
  j["field"] = f.is_rational() ? "Q" : "Fp";
  if (f.is_finite())
    j["p"] = f.characteristic();
  return j;
}

} // namespace

const char *object_kind(const Object &o) {
  switch (o.index()) {
  case 0: return "algebra";
  case 1: return "xmod";
  case 2: return "cat1";
  default: return "internal";
  }
}

Json scalar_to_json(const Scalar &s) { return s.to_string(); }

Json matrix_to_json(const Matrix &m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(m(r, c).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

Json algebra_to_json(const Algebra &a) {
  Json j = field_json(a.field());
  j["flavor"] = flavor_name(a.flavor());
  j["dim"] = a.dim();
  j["basis"] = a.labels();
  auto keys = product_keys(a.flavor());
  for (std::size_t op = 0; op < keys.size(); ++op)
    j[keys[op]] = tensor_to_json(a.product(op));
  return j;
}

Algebra algebra_from_json(const Json &j, const std::string &where) {
  if (!j.is_object())
    bad(where, "expected an algebra object");
  Field f = field_from(j, where);
  Flavor fl = flavor_from(j, where);
  auto keys = product_keys(fl);
  if (fl == Flavor::Dias)
    only_keys(j, {"field", "p", "flavor", "dim", "basis", "left", "right"}, where);
  else if (fl == Flavor::Assoc)
    only_keys(j, {"field", "p", "flavor", "dim", "basis", "product"}, where);
  else
    only_keys(j, {"field", "p", "flavor", "dim", "basis", "bracket"}, where);
  std::size_t dim = as_index(member(j, "dim", where), where + "/dim");
  std::vector<std::string> labels;
  if (auto b = optional(j, "basis")) {
    if (!b->is_array() || b->size() != dim)
      bad(where + "/basis", "expected " + std::to_string(dim) + " labels");
    for (std::size_t i = 0; i < dim; ++i) {
      if (!(*b)[i].is_string())
        bad(where + "/basis/" + std::to_string(i), "expected a string");
      labels.push_back((*b)[i].get<std::string>());
    }
  }
  std::vector<Bilinear> ps;
  for (auto k : keys)
    ps.push_back(tensor_from(optional(j, k), f, dim, dim, dim, where + "/" + k));
  return Algebra::unchecked(fl, f, dim, std::move(ps), std::move(labels));
}

Json xmod_to_json(const Matrix &mu, const Action &act) {
  Json j;
  j["flavor"] = flavor_name(act.flavor());
  j["source"] = algebra_to_json(act.actee);
  j["target"] = algebra_to_json(act.actor);
  j["mu"] = matrix_to_json(mu);
  Json a = Json::object();
  auto names = action_slot_names(act.flavor());
  if (act.flavor() == Flavor::Lie) {
    a["pm"] = tensor_to_json(act.left[0]);
  } else {
    std::size_t ops = act.left.size();
    for (std::size_t op = 0; op < ops; ++op) {
      a[names[op]] = tensor_to_json(act.left[op]);
      a[names[ops + op]] = tensor_to_json(act.right[op]);
    }
  }
  j["action"] = std::move(a);
  return j;
}

Json xmod_to_json(const CrossedModule &x) { return xmod_to_json(x.mu(), x.action()); }

XmodData xmod_from_json(const Json &j, const std::string &where) {
  only_keys(j, {"flavor", "source", "target", "mu", "action"}, where);
  Flavor fl = flavor_from(j, where);
  Algebra l = algebra_from_json(member(j, "source", where), where + "/source");
  Algebra d = algebra_from_json(member(j, "target", where), where + "/target");
  if (l.flavor() != fl || d.flavor() != fl)
    fail(Errc::FlavorMismatch, (where.empty() ? "/" : where) +
                                   ": source and target must have the crossed module's flavor");
  if (l.field() != d.field())
    fail(Errc::FieldMismatch, (where.empty() ? "/" : where) +
                                  ": source and target are over different fields");
  Field f = d.field();
  Matrix mu = matrix_from(member(j, "mu", where), f, d.dim(), l.dim(), where + "/mu");
  const Json &a = member(j, "action", where);
  std::string aw = where + "/action";
  if (!a.is_object())
    bad(aw, "expected an object of action tensors");
  auto names = action_slot_names(fl);
  for (auto it = a.begin(); it != a.end(); ++it)
    if (std::find(names.begin(), names.end(), it.key()) == names.end())
      bad(aw + "/" + it.key(), "unknown action slot for flavor " + std::string(flavor_name(fl)));
  Action act{d, l, {}, {}};
  if (fl == Flavor::Lie) {
    Bilinear pm = tensor_from(optional(a, "pm"), f, d.dim(), l.dim(), l.dim(), aw + "/pm");
    act = Action::lie(d, l, pm);
  } else {
    std::size_t ops = op_count(fl);
    for (std::size_t op = 0; op < ops; ++op) {
      const std::string &ln = names[op], &rn = names[ops + op];
      act.left.push_back(
          tensor_from(optional(a, ln.c_str()), f, d.dim(), l.dim(), l.dim(), aw + "/" + ln));
      act.right.push_back(
          tensor_from(optional(a, rn.c_str()), f, l.dim(), d.dim(), l.dim(), aw + "/" + rn));
    }
  }
  return XmodData{std::move(mu), std::move(act)};
}

Json cat1_to_json(const Cat1Object &c) {
  Json j;
  j["E"] = algebra_to_json(c.E);
  j["D"] = algebra_to_json(c.D);
  j["incl"] = matrix_to_json(c.incl);
  j["s"] = matrix_to_json(c.s);
  j["t"] = matrix_to_json(c.t);
  return j;
}

namespace {

Cat1Object cat1_part(const Json &j, const std::string &where) {
  Algebra e = algebra_from_json(member(j, "E", where), where + "/E");
  Algebra d = algebra_from_json(member(j, "D", where), where + "/D");
  if (e.flavor() != d.flavor())
    fail(Errc::FlavorMismatch, (where.empty() ? "/" : where) + ": E and D differ in flavor");
  if (e.field() != d.field())
    fail(Errc::FieldMismatch, (where.empty() ? "/" : where) + ": E and D differ in field");
  Field f = e.field();
  Matrix incl = matrix_from(member(j, "incl", where), f, e.dim(), d.dim(), where + "/incl");
  Matrix s = matrix_from(member(j, "s", where), f, d.dim(), e.dim(), where + "/s");
  Matrix t = matrix_from(member(j, "t", where), f, d.dim(), e.dim(), where + "/t");
  return Cat1Object{e, d, incl, s, t};
}

} // namespace

Cat1Object cat1_from_json(const Json &j, const std::string &where) {
  only_keys(j, {"E", "D", "incl", "s", "t"}, where);
  return cat1_part(j, where);
}

Json internal_to_json(const InternalCategory &ic) {
  Json j = cat1_to_json(ic.base);
  j["pullback"] = matrix_to_json(ic.pullback.inclusion);
  j["gamma"] = matrix_to_json(ic.gamma);
  return j;
}

InternalCategory internal_from_json(const Json &j, const std::string &where) {
  only_keys(j, {"E", "D", "incl", "s", "t", "pullback", "gamma"}, where);
  Cat1Object c = cat1_part(j, where);
  Field f = c.E.field();
  std::size_t e = c.E.dim();
  const Json &pb = member(j, "pullback", where);
  std::size_t cols = pb.is_array() && !pb.empty() && pb[0].is_array() ? pb[0].size() : 0;
  Matrix basis = matrix_from(pb, f, 2 * e, cols, where + "/pullback");
  Matrix gamma = matrix_from(member(j, "gamma", where), f, e, cols, where + "/gamma");
  auto vecs = basis.column_list();
  Subspace space = Subspace::span(f, 2 * e, vecs);
  if (space.dim() != cols)
    bad(where + "/pullback", "columns are not linearly independent");
  Subalgebra sub = subalgebra(direct_product(c.E, c.E), space);
  // gamma is given on the listed columns; rewrite it in the canonical basis
  Matrix change = sub.coordinates * basis; // canonical coords of the given columns
  Matrix inv;
  if (!invert(change, inv))
    bad(where + "/pullback", "columns do not form a basis");
  return InternalCategory{std::move(c), std::move(sub), gamma * inv};
}

Json object_to_json(const Object &o) {
  switch (o.index()) {
  case 0: return algebra_to_json(std::get<0>(o));
  case 1: return xmod_to_json(std::get<1>(o).mu, std::get<1>(o).action);
  case 2: return cat1_to_json(std::get<2>(o));
  default: return internal_to_json(std::get<3>(o));
  }
}

Object object_from_json(const Json &j) {
  if (!j.is_object())
    bad("", "expected a JSON object");
  if (j.contains("gamma"))
    return internal_from_json(j);
  if (j.contains("E"))
    return cat1_from_json(j);
  if (j.contains("mu"))
    return xmod_from_json(j);
  return algebra_from_json(j);
}

Object parse_document(const std::string &text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error &e) {
    fail(Errc::ParseError, std::string("malformed JSON: ") + e.what());
  }
  return object_from_json(j);
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

} // namespace diacat
