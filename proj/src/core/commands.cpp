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

#include "diacat/commands.hpp"

#include <functional>
#include <map>

#include "diacat/error.hpp"
#include "diacat/fixtures.hpp"

namespace diacat {

namespace {

bool math_error(Errc c) {
  switch (c) {
  case Errc::AxiomViolation:
  case Errc::InvalidAction:
  case Errc::InvalidCrossedModule:
  case Errc::InvalidCat1:
  case Errc::InvalidInternalCategory:
  case Errc::LemmaViolation:
  case Errc::NotAMorphism:
  case Errc::NotAnIdeal:
    return true;
  default:
    return false;
  }
}

std::string kind_of(const Object &o) { return object_kind(o); }

[[noreturn]] void wrong_input(std::size_t i, const char *want, const Object &o) {
  fail(Errc::ParseError, "input " + std::to_string(i) + ": expected " + want + ", got " +
                             kind_of(o));
}

Algebra as_algebra(const Object &o, std::size_t i) {
  if (!std::holds_alternative<Algebra>(o))
    wrong_input(i, "an algebra", o);
  return require_valid(std::get<Algebra>(o), "input").certify();
}

CrossedModule as_xmod(const Object &o, std::size_t i) {
  if (!std::holds_alternative<XmodData>(o))
    wrong_input(i, "a crossed module", o);
  const auto &d = std::get<XmodData>(o);
  return CrossedModule::make(d.mu, d.action);
}

Cat1Object as_cat1(const Object &o, std::size_t i) {
  if (!std::holds_alternative<Cat1Object>(o))
    wrong_input(i, "a cat1 object", o);
  const auto &c = std::get<Cat1Object>(o);
  Report r = check_cat1(c);
  if (!r.ok())
    fail(Errc::InvalidCat1, r.summary());
  return c;
}

InternalCategory as_internal(const Object &o, std::size_t i) {
  if (!std::holds_alternative<InternalCategory>(o))
    wrong_input(i, "an internal category", o);
  const auto &c = std::get<InternalCategory>(o);
  Report r = check_internal(c);
  if (!r.ok())
    fail(Errc::InvalidInternalCategory, r.summary());
  return c;
}

void want_flavor(const CrossedModule &x, Flavor f, const std::string &what) {
  if (x.flavor() != f)
    fail(Errc::FlavorMismatch, what + " needs a " + flavor_name(f) + " crossed module, got " +
                                   flavor_name(x.flavor()));
}

Object xobj(const CrossedModule &x) { return XmodData{x.mu(), x.action()}; }

Json shape(const Object &o) {
  Json j;
  j["kind"] = kind_of(o);
  switch (o.index()) {
  case 0: {
    const auto &a = std::get<Algebra>(o);
    j["flavor"] = flavor_name(a.flavor());
    j["dim"] = a.dim();
    j["field"] = a.field().name();
    break;
  }
  case 1: {
    const auto &x = std::get<XmodData>(o);
    j["flavor"] = flavor_name(x.action.flavor());
    j["source_dim"] = x.action.actee.dim();
    j["target_dim"] = x.action.actor.dim();
    j["field"] = x.action.actor.field().name();
    break;
  }
  case 2:
  case 3: {
    const Cat1Object &c = o.index() == 2 ? std::get<Cat1Object>(o) : std::get<InternalCategory>(o).base;
    j["flavor"] = flavor_name(c.flavor());
    j["E_dim"] = c.E.dim();
    j["D_dim"] = c.D.dim();
    j["field"] = c.E.field().name();
    if (o.index() == 3)
      j["pullback_dim"] = std::get<InternalCategory>(o).pullback.algebra.dim();
    break;
  }
  }
  return j;
}

} // namespace

Json report_to_json(const Report &r) {
  Json checks = Json::array();
  for (const auto &c : r.items()) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.detail.empty())
      e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  Json j;
  j["ok"] = r.ok();
  j["checks"] = std::move(checks);
  return j;
}

// ---------------------------------------------------------------- check

CommandResult run_check(const Object &o) {
  Report r;
  switch (o.index()) {
  case 0: r = std::get<Algebra>(o).check(); break;
  case 1: {
    const auto &x = std::get<XmodData>(o);
    r.merge("source", x.action.actee.check());
    r.merge("target", x.action.actor.check());
    if (r.ok())
      r.merge("crossed", check_crossed(x.mu, x.action));
    if (r.ok())
      r.merge("lemma", lemma_crossed_checks(x.mu, x.action));
    break;
  }
  case 2: r = check_cat1(std::get<Cat1Object>(o)); break;
  case 3: r = check_internal(std::get<InternalCategory>(o)); break;
  }
  CommandResult out;
  out.passed = r.ok();
  out.report = shape(o);
  out.report["verdict"] = out.passed ? "PASS" : "FAIL";
  out.report["checks"] = report_to_json(r)["checks"];
  return out;
}

// ---------------------------------------------------------------- construct

namespace {

struct Built {
  Object object;
  Json extra = Json::object();
};

using Builder = std::function<Built(const std::vector<Object> &, std::size_t)>;

struct Kind {
  std::size_t arity;
  Builder build;
};

Flavor alg_flavor(char c) {
  switch (c) {
  case 'D': return Flavor::Dias;
  case 'L': return Flavor::Leibniz;
  case 'A': return Flavor::Assoc;
  default: return Flavor::Lie;
  }
}

// one algebra in, one algebra out
Kind alg_fn(Flavor in, std::function<Algebra(const Algebra &, std::size_t)> f, const char *name) {
  return {1, [=](const std::vector<Object> &v, std::size_t n) {
            Algebra a = as_algebra(v[0], 0);
            require_flavor(a, in, name);
            return Built{f(a, n)};
          }};
}

Kind xmod_fn(Flavor in, std::function<Built(const CrossedModule &, std::size_t)> f,
             const char *name) {
  return {1, [=](const std::vector<Object> &v, std::size_t n) {
            CrossedModule x = as_xmod(v[0], 0);
            want_flavor(x, in, name);
            return f(x, n);
          }};
}

Json envelope_extra(const XEnvelope &xe) {
  Json j;
  j["UE_dim"] = xe.env_e.algebra().dim();
  j["UD_dim"] = xe.env_d.algebra().dim();
  j["X_dim"] = xe.x.dim();
  j["X_needed_closure"] = xe.x_needed_closure;
  return j;
}

Json quotient_extra(const XQuotient &q) {
  Json j;
  j["source_ideal_dim"] = q.source_ideal.dim();
  j["target_ideal_dim"] = q.input.target().dim() - q.output.target().dim();
  return j;
}

const std::map<std::string, Kind> &kinds() {
  static const std::map<std::string, Kind> m = [] {
    std::map<std::string, Kind> k;
    k["LB"] = alg_fn(Flavor::Dias, [](const Algebra &a, std::size_t) { return lb(a); }, "LB");
    k["AS"] = alg_fn(Flavor::Dias,
                     [](const Algebra &a, std::size_t) { return as_functor(a).algebra; }, "AS");
    k["Liea"] = alg_fn(Flavor::Assoc, [](const Algebra &a, std::size_t) { return liea(a); },
                       "Liea");
    k["Liel"] = alg_fn(Flavor::Leibniz,
                       [](const Algebra &a, std::size_t) { return liel(a).algebra; }, "Liel");
    k["Ud"] = alg_fn(Flavor::Leibniz,
                     [](const Algebra &a, std::size_t n) { return ud(a, n).algebra(); }, "Ud");
    k["U"] = alg_fn(Flavor::Lie,
                    [](const Algebra &a, std::size_t n) { return u_lie(a, n).algebra(); }, "U");
    k["IncAsDias"] = alg_fn(Flavor::Assoc,
                            [](const Algebra &a, std::size_t) { return dias_of_as(a); },
                            "IncAsDias");
    k["IncLieLb"] = alg_fn(Flavor::Lie,
                           [](const Algebra &a, std::size_t) { return lb_of_lie(a); },
                           "IncLieLb");

    k["XLB"] = xmod_fn(Flavor::Dias,
                       [](const CrossedModule &x, std::size_t) { return Built{xobj(xlb(x))}; },
                       "XLB");
    k["XLiea"] = xmod_fn(
        Flavor::Assoc, [](const CrossedModule &x, std::size_t) { return Built{xobj(xliea(x))}; },
        "XLiea");
    k["XAS"] = xmod_fn(Flavor::Dias,
                       [](const CrossedModule &x, std::size_t) {
                         auto q = xas(x);
                         return Built{xobj(q.output), quotient_extra(q)};
                       },
                       "XAS");
    k["XLiel"] = xmod_fn(Flavor::Leibniz,
                         [](const CrossedModule &x, std::size_t) {
                           auto q = xliel(x);
                           return Built{xobj(q.output), quotient_extra(q)};
                         },
                         "XLiel");
    k["XUd"] = xmod_fn(Flavor::Leibniz,
                       [](const CrossedModule &x, std::size_t n) {
                         auto xe = xud(x, n);
                         return Built{xobj(xe.output), envelope_extra(xe)};
                       },
                       "XUd");
    k["XU"] = xmod_fn(Flavor::Lie,
                      [](const CrossedModule &x, std::size_t n) {
                        auto xe = xu(x, n);
                        return Built{xobj(xe.output), envelope_extra(xe)};
                      },
                      "XU");
    k["IncXAsXDias"] = xmod_fn(
        Flavor::Assoc,
        [](const CrossedModule &x, std::size_t) { return Built{xobj(inc_as_dias(x))}; },
        "IncXAsXDias");
    k["IncXLieXLb"] = xmod_fn(
        Flavor::Lie, [](const CrossedModule &x, std::size_t) { return Built{xobj(inc_lie_lb(x))}; },
        "IncXLieXLb");

    // J for dias, J' for Leibniz, I for associative, I' for Lie
    for (auto [tag, fl] : {std::pair{"J", 'D'}, {"J'", 'L'}, {"I", 'A'}, {"I'", 'P'}}) {
      std::string t(tag);
      std::string base = t.substr(0, 1), prime = t.size() > 1 ? "'" : "";
      Flavor f = alg_flavor(fl);
      k[base + "0" + prime] = {1, [f](const std::vector<Object> &v, std::size_t) {
                                 Algebra a = as_algebra(v[0], 0);
                                 require_flavor(a, f, "embedding");
                                 return Built{xobj(embed_zero(a))};
                               }};
      k[base + "1" + prime] = {1, [f](const std::vector<Object> &v, std::size_t) {
                                 Algebra a = as_algebra(v[0], 0);
                                 require_flavor(a, f, "embedding");
                                 return Built{xobj(embed_identity(a))};
                               }};
    }
    // Upsilon for dias / Leibniz, Gamma for associative / Lie
    for (auto [tag, fl] : {std::pair{"U", 'D'}, {"U'", 'L'}, {"G", 'A'}, {"G'", 'P'}}) {
      std::string t(tag);
      std::string base = t.substr(0, 1), prime = t.size() > 1 ? "'" : "";
      Flavor f = alg_flavor(fl);
      std::string name = base + "0" + prime;
      k[name] = xmod_fn(
          f, [](const CrossedModule &x, std::size_t) { return Built{cokernel(x).algebra}; },
          "cokernel");
      k[base + "1" + prime] = xmod_fn(
          f, [](const CrossedModule &x, std::size_t) { return Built{x.target()}; }, "target");
      k[base + "2" + prime] = xmod_fn(
          f, [](const CrossedModule &x, std::size_t) { return Built{x.source()}; }, "source");
    }

    k["semidirect"] = {1, [](const std::vector<Object> &v, std::size_t) {
                         CrossedModule x = as_xmod(v[0], 0);
                         return Built{semidirect_product(x.action()).algebra};
                       }};
    k["cat1"] = {1, [](const std::vector<Object> &v, std::size_t) {
                   return Built{to_cat1(as_xmod(v[0], 0))};
                 }};
    k["phi"] = {1, [](const std::vector<Object> &v, std::size_t) {
                  return Built{xobj(phi(as_cat1(v[0], 0)))};
                }};
    k["internal"] = {1, [](const std::vector<Object> &v, std::size_t) -> Built {
                       if (std::holds_alternative<Cat1Object>(v[0]))
                         return Built{internal_of_cat1(as_cat1(v[0], 0))};
                       return Built{to_internal(as_xmod(v[0], 0))};
                     }};
    k["psi"] = {1, [](const std::vector<Object> &v, std::size_t) {
                  return Built{xobj(psi(as_internal(v[0], 0)))};
                }};
    return k;
  }();
  return m;
}

// "free-dias:<g>[:Q|:<p>]" and "tensor:<g>[:Q|:<p>]"
std::optional<Built> free_kind(const std::string &kind, std::size_t n) {
  bool dias = kind.rfind("free-dias:", 0) == 0;
  bool tens = kind.rfind("tensor:", 0) == 0;
  if (!dias && !tens)
    return std::nullopt;
  std::string rest = kind.substr(dias ? 10 : 7);
  std::string gs = rest.substr(0, rest.find(':'));
  std::string fs = rest.find(':') == std::string::npos ? "2" : rest.substr(rest.find(':') + 1);
  auto number = [&](const std::string &s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
      fail(Errc::ParseError, "bad construction kind \"" + kind + "\"");
    return std::stoul(s);
  };
  std::size_t g = number(gs);
  Field f = fs == "Q" ? Field::rationals() : Field::prime(number(fs));
  return Built{dias ? free_dialgebra(f, g, n) : tensor_algebra(f, g, n)};
}

} // namespace

const std::vector<std::string> &construct_kinds() {
  static const std::vector<std::string> v = [] {
    std::vector<std::string> out;
    for (const auto &[name, k] : kinds())
      out.push_back(name);
    out.push_back("free-dias:<g>[:Q|:<p>]");
    out.push_back("tensor:<g>[:Q|:<p>]");
    return out;
  }();
  return v;
}

CommandResult run_construct(const std::string &kind, const std::vector<Object> &inputs,
                            std::size_t trunc) {
  if (trunc == 0)
    trunc = 2;
  std::optional<Built> b;
  if (auto it = kinds().find(kind); it != kinds().end()) {
    if (inputs.size() != it->second.arity)
      fail(Errc::ParseError, kind + " takes " + std::to_string(it->second.arity) +
                                 " input(s), got " + std::to_string(inputs.size()));
    b = it->second.build(inputs, trunc);
  } else {
    b = free_kind(kind, trunc);
    if (!b)
      fail(Errc::UnknownName, "unknown construction \"" + kind + "\"");
    if (!inputs.empty())
      fail(Errc::ParseError, kind + " takes no inputs");
  }
  CommandResult cert = run_check(b->object);
  CommandResult out;
  out.passed = cert.passed;
  out.report["kind"] = kind;
  out.report["trunc"] = trunc;
  out.report["output"] = shape(b->object);
  out.report["certificate"] = cert.report["verdict"];
  if (!cert.passed)
    out.report["certificate_checks"] = cert.report["checks"];
  if (!b->extra.empty())
    out.report["details"] = b->extra;
  out.output = std::move(b->object);
  return out;
}

// ---------------------------------------------------------------- verify

std::vector<Algebra> all_f2_dialgebras(std::size_t n) {
  Field f = Field::prime(2);
  std::size_t cells = n * n * n;
  std::vector<Algebra> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << (2 * cells)); ++bits) {
    Bilinear l(f, n), r(f, n);
    for (std::size_t c = 0; c < cells; ++c) {
      std::size_t i = c / (n * n), j = (c / n) % n, k = c % n;
      if (bits >> c & 1)
        l.at(i, j)[k] = Scalar::one(f);
      if (bits >> (cells + c) & 1)
        r.at(i, j)[k] = Scalar::one(f);
    }
    if (check_dialgebra(l, r).ok())
      out.push_back(Algebra::make(Flavor::Dias, f, n, {l, r}));
  }
  return out;
}

XdiasCandidate random_xdias_candidate(std::mt19937_64 &rng) {
  static const std::vector<Algebra> pool[2] = {all_f2_dialgebras(1), all_f2_dialgebras(2)};
  Field f = Field::prime(2);
  auto pick = [&](std::size_t n) -> const Algebra & {
    const auto &p = pool[n - 1];
    return p[rng() % p.size()];
  };
  std::size_t dl = 1 + rng() % 2, dd = 1 + rng() % 2;
  Algebra l = pick(dl), d = pick(dd);
  Action act = Action::trivial(d, l);
  switch (rng() % 4) {
  case 0:
    break;
  case 1: { // pulled back along a morphism D -> L
    auto homs = enumerate_homs(d, l);
    if (homs.size() > 1) // skip the zero map, which comes first
      homs.erase(homs.begin());
    act = action_from_morphism(AlgebraMorphism{d, l, homs[rng() % homs.size()]});
    break;
  }
  case 2: { // ambient products of a dim-2 dialgebra on an ideal
    Algebra e = pick(2);
    while (e.is_abelian())
      e = pick(2);
    std::vector<Vector> vs;
    for (unsigned bits = 1; bits < 4; ++bits) {
      Vector v(f, 2);
      for (std::size_t i = 0; i < 2; ++i)
        if (bits >> i & 1)
          v[i] = Scalar::one(f);
      vs.push_back(v);
    }
    std::vector<Subspace> ideals{Subspace::full(f, 2)}, subs{Subspace::full(f, 2)};
    for (const auto &v : vs) {
      Subspace s = Subspace::span(f, 2, std::vector<Vector>{v});
      if (is_ideal(e, s))
        ideals.push_back(s);
      if (is_subalgebra(e, s))
        subs.push_back(s);
    }
    Subalgebra ls = subalgebra(e, ideals[rng() % ideals.size()]);
    Subalgebra ds = subalgebra(e, subs[rng() % subs.size()]);
    l = ls.algebra;
    d = ds.algebra;
    dl = l.dim();
    dd = d.dim();
    act = action_by_ambient(e, ds.inclusion, d, ls);
    break;
  }
  default: { // sparse random tensors, kept only when the action axioms hold
    auto sparse = [&](std::size_t a, std::size_t b) {
      Bilinear t(f, a, b, dl);
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
          for (std::size_t k = 0; k < dl; ++k)
            if (rng() % 4 == 0)
              t.at(i, j)[k] = Scalar::one(f);
      return t;
    };
    for (int tries = 0; tries < 256; ++tries) {
      Action cand{d, l, {sparse(dd, dl), sparse(dd, dl)}, {sparse(dl, dd), sparse(dl, dd)}};
      if (check_action(cand).ok()) {
        act = std::move(cand);
        break;
      }
    }
  }
  }
  Matrix mu(f, dd, dl);
  for (std::size_t r = 0; r < dd; ++r)
    for (std::size_t c = 0; c < dl; ++c)
      if (rng() % 2)
        mu(r, c) = Scalar::one(f);
  return XdiasCandidate{std::move(mu), std::move(act)};
}

namespace {

struct Item {
  std::string name;
  std::function<Json()> run; // sets "passed"
};

Json failed_item(const Error &e) {
  Json j;
  j["passed"] = false;
  j["error"] = std::string(errc_name(e.code())) + ": " + e.what();
  return j;
}

Json bijection_json(const BijectionReport &b) {
  Json j;
  j["adjunction"] = b.name;
  j["left"] = b.left;
  j["right"] = b.right;
  j["passed"] = b.ok();
  j["checks"] = report_to_json(b.report)["checks"];
  return j;
}

Json report_item(const Report &r) {
  Json j;
  j["passed"] = r.ok();
  j["checks"] = report_to_json(r)["checks"];
  return j;
}

Json square_json(const SquareResult &s) {
  Json j;
  j["square"] = s.id;
  j["expected"] = verdict_name(s.expected);
  j["got"] = verdict_name(s.got);
  j["passed"] = s.passed();
  j["checks"] = report_to_json(s.report)["checks"];
  return j;
}

std::optional<Category> category_of_object(const Object &o) {
  if (auto a = std::get_if<Algebra>(&o)) {
    if (!a->certified() && !a->check().ok())
      return std::nullopt;
    switch (a->flavor()) {
    case Flavor::Dias: return Category::Dias;
    case Flavor::Leibniz: return Category::Lb;
    case Flavor::Assoc: return Category::As;
    case Flavor::Lie: return Category::Lie;
    }
  }
  if (auto x = std::get_if<XmodData>(&o)) {
    switch (x->action.flavor()) {
    case Flavor::Dias: return Category::XDias;
    case Flavor::Leibniz: return Category::XLb;
    case Flavor::Assoc: return Category::XAs;
    case Flavor::Lie: return Category::XLie;
    }
  }
  return std::nullopt;
}

std::vector<NamedObject> fixtures_of(std::initializer_list<const char *> kinds) {
  std::vector<NamedObject> out;
  for (const char *k : kinds)
    for (const auto &n : fixture_names(k))
      out.push_back({n, fixture_object(n)});
  return out;
}

SquareInput square_input(const Object &o, std::size_t i) {
  if (std::holds_alternative<Algebra>(o))
    return as_algebra(o, i);
  return as_xmod(o, i);
}

NamedObject named(const std::string &n) { return {n, fixture_object(n)}; }

bool f2_small(const Object &o) {
  if (auto a = std::get_if<Algebra>(&o))
    return a->field() == Field::prime(2) && a->dim() <= 2;
  if (auto x = std::get_if<XmodData>(&o))
    return x->action.actor.field() == Field::prime(2) && x->action.actor.dim() <= 2 &&
           x->action.actee.dim() <= 2;
  return false;
}

using Pair = std::pair<NamedObject, NamedObject>;

std::vector<Pair> pairs_of(const std::vector<NamedObject> &in) {
  if (in.size() % 2)
    fail(Errc::ParseError, "adjunction inputs come in pairs; got " + std::to_string(in.size()));
  std::vector<Pair> out;
  for (std::size_t i = 0; i < in.size(); i += 2)
    out.push_back({in[i], in[i + 1]});
  return out;
}

std::vector<Pair> default_ud_pairs(std::size_t n) {
  Field f2 = Field::prime(2);
  Algebra ffe = fixture_algebra("leibniz-ff-e");
  NamedObject ab_d1{"abelian dias dim 1", Algebra::abelian(Flavor::Dias, f2, 1)};
  NamedObject ab_l2{"abelian Leibniz dim 2", Algebra::abelian(Flavor::Leibniz, f2, 2)};
  return {
      {named("leibniz-abelian-1"), named("free-dias-1-2")},
      {named("leibniz-abelian-1"), ab_d1},
      {named("leibniz-ff-e"), named("free-dias-1-2")},
      {named("leibniz-ff-e"), {"Ud(leibniz-ff-e)", ud(ffe, n).algebra()}},
      {ab_l2, named("free-dias-1-2")},
      {named("lie-abelian-1"), {"tensor(1)", tensor_algebra(f2, 1, n)}},
  };
}

std::vector<Pair> default_xud_pairs(std::size_t n) {
  Field f2 = Field::prime(2);
  std::vector<Pair> out{{{"zero Leibniz", xobj(embed_zero(Algebra::abelian(Flavor::Leibniz, f2, 0)))},
                         named("xdias-zero")}};
  for (const char *name : {"xlb-zero", "xlb-id", "xlb-ideal", "xlie-trivial"}) {
    CrossedModule x = fixture_xmod(name);
    out.push_back({named(name), {std::string(x.flavor() == Flavor::Lie ? "XU(" : "XUd(") + name + ")",
                                 xobj(xenvelope(x, n).output)}});
  }
  return out;
}

std::vector<Pair> default_chain_pairs() {
  std::vector<Pair> out;
  for (const auto &x : fixture_names("xmod")) {
    NamedObject nx = named(x);
    if (!f2_small(nx.object))
      continue;
    Flavor f = std::get<XmodData>(nx.object).action.flavor();
    for (const auto &a : fixture_names("algebra")) {
      NamedObject na = named(a);
      if (!f2_small(na.object))
        continue;
      const Algebra &alg = std::get<Algebra>(na.object);
      if (alg.flavor() == f && alg.check().ok())
        out.push_back({nx, na});
    }
  }
  return out;
}

Report internal_roundtrip(const InternalCategory &ic) {
  Report rep;
  rep.merge("input", check_internal(ic));
  if (!rep.ok())
    return rep;
  Matrix w = cat1_roundtrip_witness(ic.base);
  Matrix gd = Matrix::identity(ic.base.D.field(), ic.base.D.dim());
  rep.merge("to_internal(psi(c)) -> c", check_internal_morphism(to_internal(psi(ic)), ic, w, gd));
  Matrix inv;
  rep.add("witness invertible", invert(w, inv));
  return rep;
}

Report equivalence_item(const Object &o, std::size_t i, bool internal) {
  switch (o.index()) {
  case 1: return verify_xmod_roundtrip(as_xmod(o, i));
  case 2: return verify_cat1_roundtrip(std::get<Cat1Object>(o));
  case 3:
    if (internal)
      return internal_roundtrip(std::get<InternalCategory>(o));
    return verify_cat1_roundtrip(std::get<InternalCategory>(o).base);
  default: wrong_input(i, "a crossed module, cat1 object or internal category", o);
  }
}

Json semidirect_property(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t agree_pass = 0, agree_fail = 0, disagree = 0;
  Json first = nullptr;
  auto one = [&](const Matrix &mu, const Action &act, const std::string &label) {
    bool a = check_crossed(mu, act).ok();
    bool b = semidirect_homomorphism_checks(mu, act).ok();
    if (a != b) {
      ++disagree;
      if (first.is_null())
        first = label;
    } else {
      ++(a ? agree_pass : agree_fail);
    }
  };
  for (const auto &n : fixture_names("xmod")) {
    auto d = std::get<XmodData>(fixture_object(n));
    if (d.action.flavor() == Flavor::Dias)
      one(d.mu, d.action, n);
  }
  for (std::size_t i = 0; i < count; ++i) {
    auto c = random_xdias_candidate(rng);
    one(c.mu, c.action, "random #" + std::to_string(i));
  }
  Json j;
  j["seed"] = seed;
  j["random_candidates"] = count;
  j["both_pass"] = agree_pass;
  j["both_fail"] = agree_fail;
  j["discrepancies"] = disagree;
  if (!first.is_null())
    j["first_discrepancy"] = first;
  j["passed"] = disagree == 0;
  return j;
}

} // namespace

CommandResult run_verify(const std::string &what, const std::vector<NamedObject> &inputs,
                         std::size_t trunc, std::uint64_t seed) {
  if (trunc == 0)
    trunc = 2;
  std::vector<Item> items;
  auto guarded = [](std::function<Json()> f) {
    return [f] {
      try {
        return f();
      } catch (const Error &e) {
        if (!math_error(e.code()))
          throw;
        return failed_item(e);
      }
    };
  };

  if (what.rfind("square:", 0) == 0) {
    std::string id = what.substr(7);
    const SquareInfo &info = square_info(id);
    std::vector<NamedObject> in = inputs;
    if (in.empty())
      for (auto &o : fixtures_of({"algebra", "xmod"}))
        if (category_of_object(o.object) == info.source)
          in.push_back(std::move(o));
    for (std::size_t i = 0; i < in.size(); ++i)
      items.push_back({in[i].name, guarded([=] {
                         return square_json(check_square(id, square_input(in[i].object, i), trunc));
                       })});
  } else if (what == "adjunction:ud" || what == "adjunction:xud") {
    bool x = what == "adjunction:xud";
    auto pairs = inputs.empty() ? (x ? default_xud_pairs(trunc) : default_ud_pairs(trunc))
                                : pairs_of(inputs);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto p = pairs[i];
      items.push_back({p.first.name + " / " + p.second.name, guarded([=] {
                         if (x)
                           return bijection_json(verify_adjunction_xud(
                               as_xmod(p.first.object, 2 * i), as_xmod(p.second.object, 2 * i + 1),
                               trunc));
                         return bijection_json(verify_adjunction_ud(
                             as_algebra(p.first.object, 2 * i),
                             as_algebra(p.second.object, 2 * i + 1), trunc));
                       })});
    }
  } else if (what.rfind("adjunction:chain:", 0) == 0) {
    std::string lv = what.substr(17);
    if (lv != "0" && lv != "1")
      fail(Errc::UnknownName, "adjunction chain level must be 0 or 1");
    int level = lv[0] - '0';
    auto pairs = inputs.empty() ? default_chain_pairs() : pairs_of(inputs);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto p = pairs[i];
      items.push_back({p.first.name + " / " + p.second.name, guarded([=] {
                         return bijection_json(verify_adjunction_chain(
                             level, as_xmod(p.first.object, 2 * i),
                             as_algebra(p.second.object, 2 * i + 1)));
                       })});
    }
  } else if (what == "equivalence:cat1" || what == "equivalence:internal") {
    bool internal = what == "equivalence:internal";
    auto in = inputs.empty() ? fixtures_of({"xmod", "cat1", "internal"}) : inputs;
    for (std::size_t i = 0; i < in.size(); ++i)
      items.push_back({in[i].name, guarded([=] {
                         return report_item(equivalence_item(in[i].object, i, internal));
                       })});
  } else if (what == "parallelepiped") {
    std::vector<NamedObject> in = inputs;
    if (in.empty())
      for (auto &o : fixtures_of({"xmod"}))
        if (f2_small(o.object))
          in.push_back(std::move(o));
    for (std::size_t i = 0; i < in.size(); ++i)
      items.push_back({in[i].name, guarded([=] {
                         FaceReport fr = check_parallelepiped(as_xmod(in[i].object, i), trunc);
                         Json faces = Json::array();
                         for (const auto &f : fr.faces)
                           faces.push_back(square_json(f));
                         Json j;
                         j["faces"] = std::move(faces);
                         j["passed"] = fr.ok();
                         return j;
                       })});
  } else if (what == "property:semidirect") {
    if (!inputs.empty())
      fail(Errc::ParseError, "property:semidirect takes no inputs");
    items.push_back({"random battery", [=] { return semidirect_property(1000, seed); }});
  } else {
    fail(Errc::UnknownName, "unknown verification \"" + what + "\"");
  }

  CommandResult out;
  out.passed = true;
  Json results = Json::array();
  for (const auto &it : items) {
    Json r = it.run();
    r["input"] = it.name;
    out.passed = out.passed && r.value("passed", false);
    results.push_back(std::move(r));
  }
  out.report["what"] = what;
  out.report["trunc"] = trunc;
  out.report["results"] = std::move(results);
  out.report["count"] = items.size();
  out.report["passed"] = out.passed;
  return out;
}

} // namespace diacat
