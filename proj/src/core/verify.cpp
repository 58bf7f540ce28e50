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

#include "diacat/verify.hpp"

#include <functional>
#include <map>
#include <set>

#include "diacat/error.hpp"

namespace diacat {

const char *verdict_name(Verdict v) {
  switch (v) {
  case Verdict::Equal: return "EQUAL";
  case Verdict::Isomorphic: return "ISOMORPHIC";
  case Verdict::Fail: return "FAIL";
  }
  return "FAIL";
}

const char *category_name(Category c) {
  switch (c) {
  case Category::Dias: return "Dias";
  case Category::Lb: return "Lb";
  case Category::As: return "As";
  case Category::Lie: return "Lie";
  case Category::XDias: return "XDias";
  case Category::XLb: return "XLb";
  case Category::XAs: return "XAs";
  case Category::XLie: return "XLie";
  }
  return "?";
}

Category category_of(const SquareInput &in) {
  bool x = std::holds_alternative<CrossedModule>(in);
  Flavor f = x ? std::get<CrossedModule>(in).flavor() : std::get<Algebra>(in).flavor();
  switch (f) {
  case Flavor::Dias: return x ? Category::XDias : Category::Dias;
  case Flavor::Leibniz: return x ? Category::XLb : Category::Lb;
  case Flavor::Assoc: return x ? Category::XAs : Category::As;
  case Flavor::Lie: return x ? Category::XLie : Category::Lie;
  }
  return Category::Dias;
}

const std::vector<SquareInfo> &square_registry() {
  using C = Category;
  using V = Verdict;
  static const std::vector<SquareInfo> reg = {
      {"top-inner", C::As, V::Equal, "LB(inc A) = inc(Liea A)"},
      {"top-outer", C::Lb, V::Isomorphic, "AS(Ud g) ~ U(Liel g)"},
      {"LbDias-J0", C::Dias, V::Equal, "XLB(J0 D) = J0'(LB D)"},
      {"LbDias-J1", C::Dias, V::Equal, "XLB(J1 D) = J1'(LB D)"},
      {"LbDias-XUd-J0", C::Lb, V::Equal, "XUd(J0' g) = J0(Ud g)"},
      {"LbDias-XUd-J1", C::Lb, V::Isomorphic, "XUd(J1' g) ~ J1(Ud g)"},
      {"AsLie-I0", C::As, V::Equal, "XLiea(I0 A) = I0'(Liea A)"},
      {"AsLie-I1", C::As, V::Equal, "XLiea(I1 A) = I1'(Liea A)"},
      {"AsLie-XU-I0", C::Lie, V::Equal, "XU(I0' P) = I0(U P)"},
      {"AsLie-XU-I1", C::Lie, V::Isomorphic, "XU(I1' P) ~ I1(U P)"},
      {"AsDias-I0", C::As, V::Equal, "inc(I0 A) = J0(inc A)"},
      {"AsDias-I1", C::As, V::Equal, "inc(I1 A) = J1(inc A)"},
      {"AsDias-XAS-J0", C::Dias, V::Equal, "XAS(J0 D) = I0(AS D)"},
      {"AsDias-XAS-J1", C::Dias, V::Equal, "XAS(J1 D) = I1(AS D)"},
      {"LieLb-I0", C::Lie, V::Equal, "inc(I0' P) = J0'(inc P)"},
      {"LieLb-I1", C::Lie, V::Equal, "inc(I1' P) = J1'(inc P)"},
      {"LieLb-XLiel-J0", C::Lb, V::Equal, "XLiel(J0' g) = I0'(Liel g)"},
      {"LieLb-XLiel-J1", C::Lb, V::Equal, "XLiel(J1' g) = I1'(Liel g)"},
      {"base-XLiea", C::XAs, V::Equal, "XLB(inc y) = inc(XLiea y)"},
      {"base-XUd-XU", C::XLb, V::Isomorphic, "XAS(XUd x) ~ XU(XLiel x)"},
  };
  return reg;
}

const SquareInfo &square_info(const std::string &id) {
  for (const auto &s : square_registry())
    if (s.id == id)
      return s;
  fail(Errc::UnknownName, "unknown square \"" + id + "\"");
}

namespace {

bool math_failure(Errc c) {
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

bool invertible(const Matrix &m) {
  Matrix inv;
  return invert(m, inv);
}

Matrix id(const Algebra &a) { return Matrix::identity(a.field(), a.dim()); }

std::string key(const Matrix &m) { return m.to_string(); }
std::string key(const XmodPair &p) { return p.alpha.to_string() + "|" + p.beta.to_string(); }

XmodPair compose(const XmodPair &g, const XmodPair &f) {
  return XmodPair{g.alpha * f.alpha, g.beta * f.beta};
}
bool same(const XmodPair &a, const XmodPair &b) { return a.alpha == b.alpha && a.beta == b.beta; }

std::string dims(const CrossedModule &x) {
  return std::to_string(x.source().dim()) + " -> " + std::to_string(x.target().dim());
}

constexpr std::uint64_t kSpotBudget = 1u << 14;
constexpr std::size_t kSpotCount = 3;

// identity, zero and a few enumerated endomorphisms for naturality checks
std::vector<Matrix> spot_endomorphisms(const Algebra &a) {
  std::vector<Matrix> out{id(a), Matrix(a.field(), a.dim(), a.dim())};
  if (a.field().is_finite()) {
    try {
      for (auto &m : enumerate_homs(a, a, kSpotBudget)) {
        if (out.size() >= 2 + kSpotCount)
          break;
        if (m != out[0] && m != out[1])
          out.push_back(std::move(m));
      }
    } catch (const Error &e) {
      if (e.code() != Errc::SearchSpaceTooLarge)
        throw;
    }
  }
  return out;
}

std::vector<XmodPair> spot_endomorphisms(const CrossedModule &x) {
  std::vector<XmodPair> out{XmodPair{id(x.source()), id(x.target())},
                            XmodPair{Matrix(x.field(), x.source().dim(), x.source().dim()),
                                     Matrix(x.field(), x.target().dim(), x.target().dim())}};
  if (x.field().is_finite()) {
    try {
      for (auto &p : enumerate_xmod_homs(x, x, kSpotBudget)) {
        if (out.size() >= 2 + kSpotCount)
          break;
        if (!same(p, out[0]) && !same(p, out[1]))
          out.push_back(std::move(p));
      }
    } catch (const Error &e) {
      if (e.code() != Errc::SearchSpaceTooLarge)
        throw;
    }
  }
  return out;
}

// ---------------------------------------------------------------- squares

using SquareFn = std::function<Verdict(const SquareInput &, std::size_t, Report &)>;

const Algebra &alg(const SquareInput &in) { return std::get<Algebra>(in); }
const CrossedModule &xm(const SquareInput &in) { return std::get<CrossedModule>(in); }

Verdict equal_algebras(const Algebra &l, const Algebra &r, Report &rep) {
  bool eq = l == r;
  rep.add("composites tensor-equal", eq,
          eq ? "" : "dims " + std::to_string(l.dim()) + " and " + std::to_string(r.dim()));
  return eq ? Verdict::Equal : Verdict::Fail;
}

Verdict equal_xmods(const CrossedModule &l, const CrossedModule &r, Report &rep) {
  bool eq = l == r;
  rep.add("composites tensor-equal", eq, eq ? "" : "shapes " + dims(l) + " and " + dims(r));
  return eq ? Verdict::Equal : Verdict::Fail;
}

Verdict top_outer(const Algebra &g, std::size_t n, Report &rep) {
  auto env1 = ud(g, n);
  auto as1 = as_functor(env1.algebra());
  const Algebra &a = as1.algebra;
  auto lq = liel(g);
  auto env2 = u_lie(lq.algebra, n);
  const Algebra &b = env2.algebra();

  Matrix m = extend(env1, dias_of_as(b), env2.eta * lq.projection);
  Subspace as_ideal = kernel(as1.projection);
  bool kills = true;
  for (const auto &v : as_ideal.basis())
    kills = kills && m.apply(v).is_zero();
  rep.add("Ud g -> U(Liel g) kills the AS ideal", kills);
  Matrix f = m * as1.lift();
  Matrix h = extend(env2, a, as1.projection * env1.eta * lq.lift());
  rep.merge("forward", check_morphism(a, b, f));
  rep.merge("backward", check_morphism(b, a, h));
  rep.add("backward o forward = id", h * f == id(a));
  rep.add("forward o backward = id", f * h == id(b));

  bool natural = true;
  for (const auto &phi : spot_endomorphisms(g)) {
    Matrix as_phi = as1.projection * envelope_map(env1, env1, phi) * as1.lift();
    Matrix u_phi = envelope_map(env2, env2, lq.projection * phi * lq.lift());
    natural = natural && f * as_phi == u_phi * f;
  }
  rep.add("naturality on spot endomorphisms", natural);
  return rep.ok() ? Verdict::Isomorphic : Verdict::Fail;
}

// XUd(J1' g) ~ J1(Ud g), resp. XU(I1' P) ~ I1(U P), witness (t-bar on Ker s-bar, id)
Verdict envelope_j1(const Algebra &g, std::size_t n, Report &rep) {
  auto xe = xenvelope(embed_identity(g), n);
  const Algebra &ud_g = xe.env_d.algebra();
  auto j = embed_identity(ud_g);
  XmodPair w{xe.output.mu(), id(ud_g)};
  rep.merge("witness", check_xmod_morphism(xe.output, j, w.alpha, w.beta));
  rep.add("witness invertible", invertible(w.alpha) && invertible(w.beta));
  rep.add("X is the sum of kernel products", !xe.x_needed_closure,
          xe.x_needed_closure ? "ideal closure enlarged X" : "");

  // pi U(eps), eps : g -> g |x g the first summand, inverts t-bar on Ker s-bar
  Matrix inj(g.field(), 2 * g.dim(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    inj(i, i) = Scalar::one(g.field());
  Matrix back = xe.ker_s.coordinates * xe.q.projection * envelope_map(xe.env_d, xe.env_e, inj);
  rep.add("pi U(eps) is a left inverse", back * w.alpha == id(xe.output.source()));
  rep.add("pi U(eps) is a right inverse", w.alpha * back == id(ud_g));

  bool natural = true;
  for (const auto &phi : spot_endomorphisms(g)) {
    auto xf = xenv_map(xe, xe, XmodPair{phi, phi});
    Matrix uf = envelope_map(xe.env_d, xe.env_d, phi);
    natural = natural && w.alpha * xf.alpha == uf * w.alpha && w.beta * xf.beta == uf * w.beta;
  }
  rep.add("naturality on spot endomorphisms", natural);
  return rep.ok() ? Verdict::Isomorphic : Verdict::Fail;
}

Verdict base_iso(const CrossedModule &x, std::size_t n, Report &rep) {
  auto xe1 = xud(x, n);
  auto q1 = xas(xe1.output);
  const CrossedModule &f1 = q1.output;
  auto xl = xliel(x);
  auto xe2 = xu(xl.output, n);
  const CrossedModule &f2 = xe2.output;

  auto unit1 = xenv_unit(xe1);
  XmodPair u1{q1.pi_source() * unit1.alpha, q1.pi_target() * unit1.beta};
  XmodPair g21 = xenv_transpose(xe2, f1, factor_through(xl, u1));

  auto unit2 = xenv_unit(xe2);
  XmodPair u2{unit2.alpha * xl.pi_source(), unit2.beta * xl.pi_target()};
  XmodPair g12 = factor_through(q1, xenv_transpose(xe1, inc_as_dias(f2), u2));

  rep.merge("XU(XLiel x) -> XAS(XUd x)", check_xmod_morphism(f2, f1, g21.alpha, g21.beta));
  rep.merge("XAS(XUd x) -> XU(XLiel x)", check_xmod_morphism(f1, f2, g12.alpha, g12.beta));
  rep.add("composite on XAS(XUd x) is the identity",
          same(compose(g21, g12), XmodPair{id(f1.source()), id(f1.target())}));
  rep.add("composite on XU(XLiel x) is the identity",
          same(compose(g12, g21), XmodPair{id(f2.source()), id(f2.target())}));

  bool natural = true;
  for (const auto &phi : spot_endomorphisms(x)) {
    XmodPair f1phi = xquot_map(q1, q1, xenv_map(xe1, xe1, phi));
    XmodPair f2phi = xenv_map(xe2, xe2, xquot_map(xl, xl, phi));
    natural = natural && same(compose(g21, f2phi), compose(f1phi, g21));
  }
  rep.add("naturality on spot endomorphisms", natural);
  return rep.ok() ? Verdict::Isomorphic : Verdict::Fail;
}

const std::map<std::string, SquareFn> &square_impls() {
  static const std::map<std::string, SquareFn> impls = {
      {"top-inner",
       [](const SquareInput &in, std::size_t, Report &r) {
         return equal_algebras(lb(dias_of_as(alg(in))), lb_of_lie(liea(alg(in))), r);
       }},
      {"top-outer", [](const SquareInput &in, std::size_t n, Report &r) { return top_outer(alg(in), n, r); }},
      {"LbDias-J0",
       [](const SquareInput &in, std::size_t, Report &r) {
         return equal_xmods(xlb(embed_zero(alg(in))), embed_zero(lb(alg(in))), r);
       }},
      {"LbDias-J1",
       [](const SquareInput &in, std::size_t, Report &r) {
         return equal_xmods(xlb(embed_identity(alg(in))), embed_identity(lb(alg(in))), r);
       }},
      {"LbDias-XUd-J0",
       [](const SquareInput &in, std::size_t n, Report &r) {
         return equal_xmods(xud(embed_zero(alg(in)), n).output,
                            embed_zero(ud(alg(in), n).algebra()), r);
       }},
      {"LbDias-XUd-J1",
       [](const SquareInput &in, std::size_t n, Report &r) { return envelope_j1(alg(in), n, r); }},
      {"AsLie-I0",
       [](const SquareInput &in, std::size_t, Report &r) {
         return equal_xmods(xliea(embed_zero(alg(in))), embed_zero(liea(alg(in))), r);
       }},
      {"AsLie-I1",
       [](const SquareInput &in, std::size_t, Report &r) {
         return equal_xmods(xliea(embed_identity(alg(in))), embed_identity(liea(alg(in))), r);
       }},
      {"AsLie-XU-I0",
       [](const SquareInput &in, std::size_t n, Report &r) {
         return equal_xmods(xu(embed_zero(alg(in)), n).output,
                            embed_zero(u_lie(alg(in), n).algebra()), r);
       }},
      {"AsLie-XU-I1",
       [](const SquareInput &in, std::size_t n, Report &r) { return envelope_j1(alg(in), n, r); }},
      {"AsDias-I0",
       [](const SquareInput &in, std::size_t, Report &r) {
         return equal_xmods(inc_as_dias(embed_zero(alg(in))), embed_zero(dias_of_as(alg(in))), r);
       }},
      {"AsDias-I1",
       [](const SquareInput &in, std::size_t, Report &r) {
         return equal_xmods(inc_as_dias(embed_identity(alg(in))),
                            embed_identity(dias_of_as(alg(in))), r);
       }},
      {"AsDias-XAS-J0",
       [](const SquareInput &in, std::size_t, Report &r) {
         return equal_xmods(xas(embed_zero(alg(in))).output,
                            embed_zero(as_functor(alg(in)).algebra), r);
       }},
      {"AsDias-XAS-J1",
       [](const SquareInput &in, std::size_t, Report &r) {
         return equal_xmods(xas(embed_identity(alg(in))).output,
                            embed_identity(as_functor(alg(in)).algebra), r);
       }},
      {"LieLb-I0",
       [](const SquareInput &in, std::size_t, Report &r) {
         return equal_xmods(inc_lie_lb(embed_zero(alg(in))), embed_zero(lb_of_lie(alg(in))), r);
       }},
      {"LieLb-I1",
       [](const SquareInput &in, std::size_t, Report &r) {
         return equal_xmods(inc_lie_lb(embed_identity(alg(in))),
                            embed_identity(lb_of_lie(alg(in))), r);
       }},
      {"LieLb-XLiel-J0",
       [](const SquareInput &in, std::size_t, Report &r) {
         return equal_xmods(xliel(embed_zero(alg(in))).output, embed_zero(liel(alg(in)).algebra),
                            r);
       }},
      {"LieLb-XLiel-J1",
       [](const SquareInput &in, std::size_t, Report &r) {
         return equal_xmods(xliel(embed_identity(alg(in))).output,
                            embed_identity(liel(alg(in)).algebra), r);
       }},
      {"base-XLiea",
       [](const SquareInput &in, std::size_t, Report &r) {
         return equal_xmods(xlb(inc_as_dias(xm(in))), inc_lie_lb(xliea(xm(in))), r);
       }},
      {"base-XUd-XU",
       [](const SquareInput &in, std::size_t n, Report &r) { return base_iso(xm(in), n, r); }},
  };
  return impls;
}

} // namespace

SquareResult check_square(const std::string &id, const SquareInput &in, std::size_t n) {
  const SquareInfo &info = square_info(id);
  Category c = category_of(in);
  if (c != info.source)
    fail(Errc::FlavorMismatch, "square " + id + " starts in " + category_name(info.source) +
                                   ", input is in " + category_name(c));
  SquareResult res{id, info.expected, Verdict::Fail, {}};
  try {
    res.got = square_impls().at(id)(in, n, res.report);
  } catch (const Error &e) {
    if (!math_failure(e.code()))
      throw;
    res.report.add("construction", false, std::string(errc_name(e.code())) + ": " + e.what());
    res.got = Verdict::Fail;
  }
  return res;
}

// ---------------------------------------------------------------- adjunctions

namespace {

// Checks that fwd is a bijection from left onto right with inverse back.
template <class L, class R>
void check_bijection(Report &rep, const std::string &name, const std::vector<L> &left,
                     const std::vector<R> &right, const std::function<R(const L &)> &fwd,
                     const std::function<L(const R &)> &back) {
  std::set<std::string> lkeys, rkeys, images;
  for (const auto &l : left)
    lkeys.insert(key(l));
  for (const auto &r : right)
    rkeys.insert(key(r));
  bool into = true, inverse = true;
  std::string detail;
  for (const auto &l : left) {
    R r = fwd(l);
    std::string k = key(r);
    if (!rkeys.count(k)) {
      into = false;
      detail = "image outside the right hom-set";
    }
    images.insert(k);
    if (key(back(r)) != key(l))
      inverse = false;
  }
  for (const auto &r : right) {
    std::string k;
    try {
      k = key(back(r));
    } catch (const Error &e) {
      if (!math_failure(e.code()))
        throw;
      inverse = false;
      detail = e.what();
      continue;
    }
    if (!lkeys.count(k) || key(fwd(back(r))) != key(r))
      inverse = false;
  }
  std::string counts = std::to_string(left.size()) + " vs " + std::to_string(right.size());
  rep.add(name + ": cardinalities equal", left.size() == right.size(), counts);
  rep.add(name + ": maps into the right hom-set", into, detail);
  rep.add(name + ": injective", images.size() == left.size());
  rep.add(name + ": surjective", images == rkeys);
  rep.add(name + ": inverse map agrees", inverse, inverse ? "" : detail);
}

} // namespace

BijectionReport verify_adjunction_ud(const Algebra &g, const Algebra &d, std::size_t n) {
  bool lie = g.flavor() == Flavor::Lie;
  require_flavor(g, lie ? Flavor::Lie : Flavor::Leibniz, "envelope adjunction");
  require_flavor(d, lie ? Flavor::Assoc : Flavor::Dias, "envelope adjunction");
  BijectionReport br{lie ? "U -| Liea" : "Ud -| LB", 0, 0, {}};
  bool nil = is_nilpotent(d, n);
  br.report.add("target nilpotent of class <= N", nil);
  if (!nil)
    return br;
  auto env = lie ? u_lie(g, n) : ud(g, n);
  Algebra gd = lie ? liea(d) : lb(d);
  auto left = enumerate_homs(env.algebra(), d);
  auto right = enumerate_homs(g, gd);
  br.left = left.size();
  br.right = right.size();
  std::function<Matrix(const Matrix &)> fwd = [&](const Matrix &f) { return f * env.eta; };
  std::function<Matrix(const Matrix &)> back = [&](const Matrix &r) { return extend(env, d, r); };
  check_bijection(br.report, br.name, left, right, fwd, back);
  return br;
}

BijectionReport verify_adjunction_xud(const CrossedModule &x, const CrossedModule &y,
                                      std::size_t n) {
  bool lie = x.flavor() == Flavor::Lie;
  if (x.flavor() != (lie ? Flavor::Lie : Flavor::Leibniz) ||
      y.flavor() != (lie ? Flavor::Assoc : Flavor::Dias))
    fail(Errc::FlavorMismatch, "crossed-module envelope adjunction needs (Lb, Dias) or (Lie, As)");
  BijectionReport br{lie ? "XU -| XLiea" : "XUd -| XLB", 0, 0, {}};
  bool nil = is_nilpotent(semidirect_product(y.action()).algebra, n);
  br.report.add("target semidirect product nilpotent of class <= N", nil);
  if (!nil)
    return br;
  auto xe = xenvelope(x, n);
  CrossedModule gy = lie ? xliea(y) : xlb(y);
  auto left = enumerate_xmod_homs(xe.output, y);
  auto right = enumerate_xmod_homs(x, gy);
  br.left = left.size();
  br.right = right.size();
  std::function<XmodPair(const XmodPair &)> fwd = [&](const XmodPair &g) {
    return xenv_untranspose(xe, g);
  };
  std::function<XmodPair(const XmodPair &)> back = [&](const XmodPair &f) {
    return xenv_transpose(xe, y, f);
  };
  check_bijection(br.report, br.name, left, right, fwd, back);
  for (const auto &p : left)
    if (!check_xmod_morphism(xe.output, y, p.alpha, p.beta).ok()) {
      br.report.add("enumerated morphisms verified", false);
      break;
    }
  return br;
}

BijectionReport verify_adjunction_chain(int i, const CrossedModule &x, const Algebra &a) {
  if (i != 0 && i != 1)
    fail(Errc::UnknownName, "adjunction chain level must be 0 or 1");
  if (x.flavor() != a.flavor())
    fail(Errc::FlavorMismatch, "adjunction chain needs a crossed module and an algebra of one flavor");
  bool xd = x.flavor() == Flavor::Dias || x.flavor() == Flavor::Leibniz;
  bool primed = x.flavor() == Flavor::Leibniz || x.flavor() == Flavor::Lie;
  std::string up = std::string(xd ? "Upsilon" : "Gamma") + (primed ? "'" : "");
  std::string j = std::string(xd ? "J" : "I") + (primed ? "'" : "");
  std::string si = std::to_string(i), si1 = std::to_string(i + 1);
  BijectionReport br{up + si + " -| " + j + si + " -| " + up + si1, 0, 0, {}};
  Report &rep = br.report;
  Field f = x.field();
  const Algebra &l = x.source(), &d = x.target();
  const Matrix &mu = x.mu();
  auto xends = spot_endomorphisms(x);
  auto aends = spot_endomorphisms(a);

  if (i == 0) {
    // Upsilon0 -| J0 : f |-> (0, f pi)
    auto coker = cokernel(x);
    auto left = enumerate_homs(coker.algebra, a);
    auto right = enumerate_xmod_homs(x, embed_zero(a));
    std::function<XmodPair(const Matrix &)> fwd = [&](const Matrix &m) {
      return XmodPair{Matrix(f, 0, l.dim()), m * coker.projection};
    };
    std::function<Matrix(const XmodPair &)> back = [&](const XmodPair &p) {
      return p.beta * coker.lift();
    };
    check_bijection(rep, up + "0 -| " + j + "0", left, right, fwd, back);
    bool nat = true;
    for (const auto &m : left) {
      for (const auto &phi : xends) {
        Matrix induced = coker.projection * phi.beta * coker.lift();
        nat = nat && same(fwd(m * induced), compose(fwd(m), phi));
      }
      for (const auto &h : aends)
        nat = nat && same(fwd(h * m), compose(XmodPair{Matrix(f, 0, 0), h}, fwd(m)));
    }
    rep.add(up + "0 -| " + j + "0: naturality", nat);
    br.left += left.size();
    br.right += right.size();

    // J0 -| Upsilon1 : (0, b) |-> b
    auto left2 = enumerate_xmod_homs(embed_zero(a), x);
    auto right2 = enumerate_homs(a, d);
    std::function<Matrix(const XmodPair &)> fwd2 = [](const XmodPair &p) { return p.beta; };
    std::function<XmodPair(const Matrix &)> back2 = [&](const Matrix &b) {
      return XmodPair{Matrix(f, l.dim(), 0), b};
    };
    check_bijection(rep, j + "0 -| " + up + "1", left2, right2, fwd2, back2);
    nat = true;
    for (const auto &p : left2) {
      for (const auto &phi : xends)
        nat = nat && fwd2(compose(phi, p)) == phi.beta * fwd2(p);
      for (const auto &h : aends)
        nat = nat && fwd2(compose(p, XmodPair{Matrix(f, 0, 0), h})) == fwd2(p) * h;
    }
    rep.add(j + "0 -| " + up + "1: naturality", nat);
    br.left += left2.size();
    br.right += right2.size();
  } else {
    // Upsilon1 -| J1 : f |-> (f mu, f)
    auto left = enumerate_homs(d, a);
    auto right = enumerate_xmod_homs(x, embed_identity(a));
    std::function<XmodPair(const Matrix &)> fwd = [&](const Matrix &m) {
      return XmodPair{m * mu, m};
    };
    std::function<Matrix(const XmodPair &)> back = [](const XmodPair &p) { return p.beta; };
    check_bijection(rep, up + "1 -| " + j + "1", left, right, fwd, back);
    bool nat = true;
    for (const auto &m : left) {
      for (const auto &phi : xends)
        nat = nat && same(fwd(m * phi.beta), compose(fwd(m), phi));
      for (const auto &h : aends)
        nat = nat && same(fwd(h * m), compose(XmodPair{h, h}, fwd(m)));
    }
    rep.add(up + "1 -| " + j + "1: naturality", nat);
    br.left += left.size();
    br.right += right.size();

    // J1 -| Upsilon2 : (a', mu a') <-| a'
    auto left2 = enumerate_xmod_homs(embed_identity(a), x);
    auto right2 = enumerate_homs(a, l);
    std::function<Matrix(const XmodPair &)> fwd2 = [](const XmodPair &p) { return p.alpha; };
    std::function<XmodPair(const Matrix &)> back2 = [&](const Matrix &m) {
      return XmodPair{m, mu * m};
    };
    check_bijection(rep, j + "1 -| " + up + "2", left2, right2, fwd2, back2);
    nat = true;
    for (const auto &p : left2) {
      for (const auto &phi : xends)
        nat = nat && fwd2(compose(phi, p)) == phi.alpha * fwd2(p);
      for (const auto &h : aends)
        nat = nat && fwd2(compose(p, XmodPair{h, h})) == fwd2(p) * h;
    }
    rep.add(j + "1 -| " + up + "2: naturality", nat);
    br.left += left2.size();
    br.right += right2.size();
  }
  return br;
}

// ---------------------------------------------------------------- faces

FaceReport check_parallelepiped(const CrossedModule &x, std::size_t n) {
  CrossedModule base = x;
  switch (x.flavor()) {
  case Flavor::Lie: base = inc_lie_lb(x); break;
  case Flavor::Dias: base = xlb(x); break;
  case Flavor::Assoc: base = xlb(inc_as_dias(x)); break;
  case Flavor::Leibniz: break;
  }
  auto xe1 = xud(base, n);
  auto xl = xliel(base);
  auto xe2 = xu(xl.output, n);
  const Algebra &g = base.target();
  const Algebra &dias = xe1.output.target();
  const Algebra &as = xe2.output.target();
  const Algebra &lie = xl.output.target();

  FaceReport out;
  out.faces.push_back(check_square("top-inner", as, n));
  out.faces.push_back(check_square("top-outer", g, n));
  for (const char *i : {"0", "1"}) {
    std::string s(i);
    out.faces.push_back(check_square("LbDias-J" + s, dias, n));
    out.faces.push_back(check_square("LbDias-XUd-J" + s, g, n));
    out.faces.push_back(check_square("AsLie-I" + s, as, n));
    out.faces.push_back(check_square("AsLie-XU-I" + s, lie, n));
    out.faces.push_back(check_square("AsDias-I" + s, as, n));
    out.faces.push_back(check_square("AsDias-XAS-J" + s, dias, n));
    out.faces.push_back(check_square("LieLb-I" + s, lie, n));
    out.faces.push_back(check_square("LieLb-XLiel-J" + s, g, n));
  }
  out.faces.push_back(check_square("base-XLiea", xe2.output, n));
  out.faces.push_back(check_square("base-XUd-XU", base, n));
  return out;
}

// ---------------------------------------------------------------- equivalences

Report verify_xmod_roundtrip(const CrossedModule &x) {
  Report rep;
  Matrix il = id(x.source()), id_d = id(x.target());
  auto c = to_cat1(x);
  rep.merge("to_cat1", check_cat1(c));
  auto y = phi(c);
  rep.add("phi(to_cat1(x)) isomorphic to x (identity witness)", is_xmod_isomorphism(y, x, il, id_d));
  auto ic = to_internal(x);
  rep.merge("to_internal", check_internal(ic));
  auto z = psi(ic);
  rep.add("psi(to_internal(x)) isomorphic to x (identity witness)",
          is_xmod_isomorphism(z, x, il, id_d));
  return rep;
}

Report check_internal_morphism(const InternalCategory &a, const InternalCategory &b,
                               const Matrix &f, const Matrix &g) {
  Report rep;
  rep.merge("cat1", check_cat1_morphism(a.base, b.base, f, g));
  Matrix ff = Matrix::block_diagonal(f, f);
  bool ok = true;
  for (std::size_t k = 0; k < a.pullback.algebra.dim(); ++k) {
    Vector pair = ff.apply(a.pullback.inclusion.column(k));
    if (!b.pullback.space.contains(pair)) {
      ok = false;
      break;
    }
    Vector lhs = b.gamma.apply(b.pullback.coordinates.apply(pair));
    if (lhs != f.apply(a.gamma.column(k))) {
      ok = false;
      break;
    }
  }
  rep.add("compatible with composition", ok);
  return rep;
}

Report verify_cat1_roundtrip(const Cat1Object &c) {
  Report rep;
  rep.merge("input", check_cat1(c));
  if (!rep.ok())
    return rep;
  Matrix w = cat1_roundtrip_witness(c);
  Matrix gd = id(c.D);
  auto c2 = to_cat1(phi(c));
  rep.merge("to_cat1(phi(c)) -> c", check_cat1_morphism(c2, c, w, gd));
  rep.add("witness invertible", invertible(w));
  auto ic = internal_of_cat1(c);
  rep.merge("internal", check_internal(ic));
  auto ic2 = to_internal(psi(ic));
  rep.merge("to_internal(psi(c)) -> c", check_internal_morphism(ic2, ic, w, gd));
  return rep;
}

} // namespace diacat
