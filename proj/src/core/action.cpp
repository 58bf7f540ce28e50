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

#include "diacat/action.hpp"

#include <atomic>
#include <sstream>

#include "diacat/error.hpp"
#include "identities.hpp"

namespace diacat {

namespace {

std::atomic<std::uint64_t> g_lemma_runs{0};
std::atomic<std::uint64_t> g_lemma_failures{0};

void require_shape(const Bilinear &b, std::size_t l, std::size_t r, std::size_t o,
                   const std::string &what) {
  if (b.left_dim() != l || b.right_dim() != r || b.out_dim() != o)
    fail(Errc::DimensionMismatch, what + ": tensor shape " + std::to_string(b.left_dim()) + "x" +
                                      std::to_string(b.right_dim()) + "->" +
                                      std::to_string(b.out_dim()) + ", expected " +
                                      std::to_string(l) + "x" + std::to_string(r) + "->" +
                                      std::to_string(o));
}

void require_action_shapes(const Action &a) {
  if (a.actor.flavor() != a.actee.flavor())
    fail(Errc::FlavorMismatch, "actor and actee have different flavors");
  if (a.actor.field() != a.actee.field())
    fail(Errc::FieldMismatch, "actor and actee over different fields");
  std::size_t ops = op_count(a.flavor());
  if (a.left.size() != ops || a.right.size() != ops)
    fail(Errc::DimensionMismatch, "action needs " + std::to_string(ops) + " tensors per side");
  std::size_t d = a.actor.dim(), l = a.actee.dim();
  for (std::size_t op = 0; op < ops; ++op) {
    require_shape(a.left[op], d, l, l, "action D x L -> L");
    require_shape(a.right[op], l, d, l, "action L x D -> L");
  }
}

// Product tensors of L (+) D built from the action, no verification.
std::vector<Bilinear> semidirect_tensors(const Action &a) {
  std::size_t l = a.actee.dim(), d = a.actor.dim(), n = l + d;
  Field f = a.actor.field();
  auto embed_l = [&](const Vector &v) {
    Vector w(f, n);
    for (std::size_t i = 0; i < l; ++i)
      w[i] = v[i];
    return w;
  };
  auto embed_d = [&](const Vector &v) {
    Vector w(f, n);
    for (std::size_t i = 0; i < d; ++i)
      w[l + i] = v[i];
    return w;
  };
  std::vector<Bilinear> ps;
  for (std::size_t op = 0; op < a.actor.ops(); ++op) {
    Bilinear p(f, n);
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j)
        p.at(i, j) = embed_l(a.actee.product(op).at(i, j));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < l; ++j) {
        p.at(l + i, j) = embed_l(a.left[op].at(i, j));
        p.at(j, l + i) = embed_l(a.right[op].at(j, i));
      }
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        p.at(l + i, l + j) = embed_d(a.actor.product(op).at(i, j));
    ps.push_back(std::move(p));
  }
  return ps;
}

std::string pattern_name(unsigned mask) {
  const char *vars[] = {"x", "y", "z"};
  std::string s = "[";
  for (unsigned pos = 0; pos < 3; ++pos) {
    if (pos)
      s += " ";
    s += vars[pos];
    s += (mask >> pos) & 1 ? ":D" : ":L";
  }
  return s + "]";
}

// Mixed placements: masks with one or two variables in D.
std::vector<unsigned> mixed_patterns() { return {4, 2, 1, 3, 5, 6}; }

Report check_lie_action(const Action &a) {
  Report rep;
  const Bilinear &pm = a.left[0];
  const Bilinear &mb = a.actee.product(0);
  const Bilinear &pb = a.actor.product(0);
  std::size_t d = a.actor.dim(), l = a.actee.dim();
  {
    bool ok = a.right[0] == -pm.swapped();
    rep.add("[m,p] = -[p,m]", ok, ok ? "" : "right tensor is not minus the swapped left tensor");
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < d && ok; ++i)
      for (std::size_t j = 0; j < d && ok; ++j)
        for (std::size_t k = 0; k < l && ok; ++k) {
          Vector m = Vector::unit(a.actee.field(), l, k);
          Vector pi = a.actor.basis(i), pj = a.actor.basis(j);
          Vector lhs = pm.apply(pb.at(i, j), m);
          Vector rhs = pm.apply(pi, pm.apply(pj, m)) - pm.apply(pj, pm.apply(pi, m));
          if (lhs != rhs) {
            ok = false;
            detail = "triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                     std::to_string(k) + "): lhs " + lhs.to_string() + " rhs " + rhs.to_string();
          }
        }
    rep.add("[[p,p'],m] = [p,[p',m]] - [p',[p,m]]", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < d && ok; ++i)
      for (std::size_t j = 0; j < l && ok; ++j)
        for (std::size_t k = 0; k < l && ok; ++k) {
          Vector p = a.actor.basis(i);
          Vector m = a.actee.basis(j), m2 = a.actee.basis(k);
          Vector lhs = pm.apply(p, mb.at(j, k));
          Vector rhs = mb.apply(pm.apply(p, m), m2) + mb.apply(m, pm.apply(p, m2));
          if (lhs != rhs) {
            ok = false;
            detail = "triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                     std::to_string(k) + "): lhs " + lhs.to_string() + " rhs " + rhs.to_string();
          }
        }
    rep.add("[p,[m,m']] = [[p,m],m'] + [m,[p,m']]", ok, detail);
  }
  return rep;
}

} // namespace

bool Action::is_trivial() const noexcept {
  for (const auto &b : left)
    if (!b.is_zero())
      return false;
  for (const auto &b : right)
    if (!b.is_zero())
      return false;
  return true;
}

Action Action::trivial(const Algebra &actor, const Algebra &actee) {
  Field f = actor.field();
  std::size_t ops = op_count(actor.flavor());
  return Action{actor, actee,
                std::vector<Bilinear>(ops, Bilinear(f, actor.dim(), actee.dim(), actee.dim())),
                std::vector<Bilinear>(ops, Bilinear(f, actee.dim(), actor.dim(), actee.dim()))};
}

Action Action::lie(const Algebra &p, const Algebra &m, const Bilinear &pm) {
  return Action{p, m, {pm}, {-pm.swapped()}};
}

bool operator==(const Action &a, const Action &b) {
  return a.actor == b.actor && a.actee == b.actee && a.left == b.left && a.right == b.right;
}

std::vector<std::string> action_slot_names(Flavor f) {
  switch (f) {
  case Flavor::Dias: return {"dl_left", "dl_right", "ld_left", "ld_right"};
  case Flavor::Leibniz: return {"gq", "qg"};
  case Flavor::Assoc: return {"ar", "ra"};
  case Flavor::Lie: return {"pm"};
  }
  return {};
}

std::size_t action_instance_count(Flavor f) {
  if (f == Flavor::Lie)
    return 2;
  return identities(f).size() * mixed_patterns().size();
}

Report check_action(const Action &a) {
  static const bool count_ok = action_instance_count(Flavor::Dias) == 30 &&
                               action_instance_count(Flavor::Leibniz) == 6 &&
                               action_instance_count(Flavor::Assoc) == 6;
  if (!count_ok)
    fail(Errc::Internal, "mixed-instance generator produced an unexpected count");
  require_action_shapes(a);
  if (a.flavor() == Flavor::Lie)
    return check_lie_action(a);

  auto ps = semidirect_tensors(a);
  std::size_t l = a.actee.dim(), d = a.actor.dim();
  Report rep;
  for (const auto &id : identities(a.flavor())) {
    for (unsigned mask : mixed_patterns()) {
      std::size_t range[3], offset[3];
      for (unsigned pos = 0; pos < 3; ++pos) {
        bool in_d = (mask >> pos) & 1;
        range[pos] = in_d ? d : l;
        offset[pos] = in_d ? l : 0;
      }
      bool ok = true;
      std::string detail;
      for (std::size_t i = 0; i < range[0] && ok; ++i)
        for (std::size_t j = 0; j < range[1] && ok; ++j)
          for (std::size_t k = 0; k < range[2] && ok; ++k) {
            auto v = eval_identity(id, ps, offset[0] + i, offset[1] + j, offset[2] + k);
            if (!v.holds()) {
              ok = false;
              std::ostringstream os;
              os << "basis (" << i << "," << j << "," << k << "): lhs "
                 << v.lhs.slice(0, l).to_string() << " rhs " << v.rhs.slice(0, l).to_string();
              detail = os.str();
            }
          }
      rep.add(id.name + " " + pattern_name(mask), ok, detail);
    }
  }
  return rep;
}

Semidirect semidirect_product(const Action &a, bool verify) {
  require_action_shapes(a);
  if (verify) {
    require_valid(a.actor, "semidirect product");
    require_valid(a.actee, "semidirect product");
    auto rep = check_action(a);
    if (!rep.ok())
      fail(Errc::InvalidAction, "invalid action: " + rep.summary());
  }
  std::size_t l = a.actee.dim(), d = a.actor.dim(), n = l + d;
  Field f = a.actor.field();
  std::vector<std::string> labels;
  for (const auto &s : a.actee.labels())
    labels.push_back("(" + s + ",0)");
  for (const auto &s : a.actor.labels())
    labels.push_back("(0," + s + ")");
  auto alg = verify ? Algebra::make(a.flavor(), f, n, semidirect_tensors(a), labels)
                    : Algebra::unchecked(a.flavor(), f, n, semidirect_tensors(a), labels);
  Matrix inj(f, n, l), proj(f, d, n), split(f, n, d);
  for (std::size_t i = 0; i < l; ++i)
    inj(i, i) = Scalar::one(f);
  for (std::size_t i = 0; i < d; ++i) {
    proj(i, l + i) = Scalar::one(f);
    split(l + i, i) = Scalar::one(f);
  }
  return Semidirect{std::move(alg), std::move(inj), std::move(proj), std::move(split)};
}

Action action_from_split(const Algebra &e, const Matrix &inj, const Matrix &split,
                         const Algebra &l, const Algebra &d) {
  Matrix back;
  if (!left_inverse(inj, back))
    fail(Errc::InvalidAction, "kernel inclusion is not injective");
  Subspace img = image(inj);
  Action act = Action::trivial(d, l);
  auto icols = inj.column_list();
  auto scols = split.column_list();
  for (std::size_t op = 0; op < e.ops(); ++op)
    for (std::size_t i = 0; i < d.dim(); ++i)
      for (std::size_t j = 0; j < l.dim(); ++j) {
        Vector xl = e.mul(op, scols[i], icols[j]);
        Vector lx = e.mul(op, icols[j], scols[i]);
        if (!img.contains(xl) || !img.contains(lx))
          fail(Errc::InvalidAction, "products with the kernel leave the kernel");
        act.left[op].at(i, j) = back.apply(xl);
        act.right[op].at(j, i) = back.apply(lx);
      }
  return act;
}

Action action_by_ambient(const Algebra &e, const Matrix &incl_d, const Algebra &d,
                         const Subalgebra &l) {
  Action act = Action::trivial(d, l.algebra);
  auto dcols = incl_d.column_list();
  auto lcols = l.inclusion.column_list();
  for (std::size_t op = 0; op < e.ops(); ++op)
    for (std::size_t i = 0; i < d.dim(); ++i)
      for (std::size_t j = 0; j < l.algebra.dim(); ++j) {
        Vector xl = e.mul(op, dcols[i], lcols[j]);
        Vector lx = e.mul(op, lcols[j], dcols[i]);
        if (!l.space.contains(xl) || !l.space.contains(lx))
          fail(Errc::InvalidAction, "ambient products leave the acted-upon subalgebra");
        act.left[op].at(i, j) = l.coordinates.apply(xl);
        act.right[op].at(j, i) = l.coordinates.apply(lx);
      }
  return act;
}

Action self_action(const Algebra &d) { return Action{d, d, d.products(), d.products()}; }

Action action_from_morphism(const AlgebraMorphism &f) {
  const Algebra &d = f.source, &l = f.target;
  Action act = Action::trivial(d, l);
  auto cols = f.matrix.column_list();
  for (std::size_t op = 0; op < d.ops(); ++op)
    for (std::size_t i = 0; i < d.dim(); ++i)
      for (std::size_t j = 0; j < l.dim(); ++j) {
        act.left[op].at(i, j) = l.mul(op, cols[i], l.basis(j));
        act.right[op].at(j, i) = l.mul(op, l.basis(j), cols[i]);
      }
  return act;
}

Action action_from_surjection(const AlgebraMorphism &mu) {
  const Algebra &l = mu.source, &d = mu.target;
  Subspace ker = kernel(mu.matrix);
  for (const auto &k : ker.basis())
    for (std::size_t op = 0; op < l.ops(); ++op)
      for (std::size_t j = 0; j < l.dim(); ++j)
        if (!l.mul(op, k, l.basis(j)).is_zero() || !l.mul(op, l.basis(j), k).is_zero())
          fail(Errc::InvalidAction, "kernel is not in the annihilator; pre-image choice matters");
  Action act = Action::trivial(d, l);
  for (std::size_t i = 0; i < d.dim(); ++i) {
    Vector y(l.field(), l.dim());
    if (!solve(mu.matrix, d.basis(i), y))
      fail(Errc::InvalidAction, "map is not surjective");
    for (std::size_t op = 0; op < l.ops(); ++op)
      for (std::size_t j = 0; j < l.dim(); ++j) {
        act.left[op].at(i, j) = l.mul(op, y, l.basis(j));
        act.right[op].at(j, i) = l.mul(op, l.basis(j), y);
      }
  }
  return act;
}

// ---------------------------------------------------------------- crossed

Report check_crossed(const Matrix &mu, const Action &a) {
  require_action_shapes(a);
  const Algebra &l = a.actee, &d = a.actor;
  if (mu.rows() != d.dim() || mu.cols() != l.dim())
    fail(Errc::DimensionMismatch, "mu has shape " + std::to_string(mu.rows()) + "x" +
                                      std::to_string(mu.cols()) + ", expected " +
                                      std::to_string(d.dim()) + "x" + std::to_string(l.dim()));
  Report rep;
  rep.merge("target", d.check());
  rep.merge("source", l.check());
  rep.merge("action", check_action(a));
  rep.merge("mu", check_morphism(l, d, mu));
  Flavor f = a.flavor();
  auto mcols = mu.column_list();
  for (std::size_t op = 0; op < d.ops(); ++op) {
    std::string o = op_symbol(f, op);
    bool e1 = true, e2 = true, p1 = true, p2 = true;
    std::string d1, d2, q1, q2;
    for (std::size_t i = 0; i < d.dim(); ++i)
      for (std::size_t j = 0; j < l.dim(); ++j) {
        Vector x = d.basis(i);
        if (e1) {
          Vector lhs = mu.apply(a.left[op].at(i, j));
          Vector rhs = d.mul(op, x, mcols[j]);
          if (lhs != rhs) {
            e1 = false;
            d1 = "x=" + std::to_string(i) + " l=" + std::to_string(j) + ": " + lhs.to_string() +
                 " vs " + rhs.to_string();
          }
        }
        if (e2) {
          Vector lhs = mu.apply(a.right[op].at(j, i));
          Vector rhs = d.mul(op, mcols[j], x);
          if (lhs != rhs) {
            e2 = false;
            d2 = "x=" + std::to_string(i) + " l=" + std::to_string(j) + ": " + lhs.to_string() +
                 " vs " + rhs.to_string();
          }
        }
      }
    for (std::size_t i = 0; i < l.dim(); ++i)
      for (std::size_t j = 0; j < l.dim(); ++j) {
        const Vector &ll = l.product(op).at(i, j);
        if (p1) {
          Vector lhs = a.act_left(op, mcols[i], l.basis(j));
          if (lhs != ll) {
            p1 = false;
            q1 = "l=" + std::to_string(i) + " l'=" + std::to_string(j) + ": " + lhs.to_string() +
                 " vs " + ll.to_string();
          }
        }
        if (p2) {
          Vector rhs = a.act_right(op, l.basis(i), mcols[j]);
          if (rhs != ll) {
            p2 = false;
            q2 = "l=" + std::to_string(i) + " l'=" + std::to_string(j) + ": " + ll.to_string() +
                 " vs " + rhs.to_string();
          }
        }
      }
    rep.add("mu(x" + o + "l) = x" + o + "mu(l)", e1, d1);
    rep.add("mu(l" + o + "x) = mu(l)" + o + "x", e2, d2);
    rep.add("mu(l)" + o + "l' = l" + o + "l'", p1, q1);
    rep.add("l" + o + "l' = l" + o + "mu(l')", p2, q2);
  }
  return rep;
}

Report lemma_crossed_checks(const Matrix &mu, const Action &a) {
  const Algebra &l = a.actee, &d = a.actor;
  Report rep;
  Subspace ker = kernel(mu);
  Subspace ann = annihilator(l);
  rep.add("Ker mu in Ann(L)", ann.contains(ker));
  Subspace img = image(mu);
  bool ideal = is_ideal(d, img);
  rep.add("Im mu is an ideal", ideal);

  bool trivial = true;
  for (std::size_t op = 0; op < d.ops() && trivial; ++op)
    for (const auto &x : img.basis())
      for (const auto &k : ann.basis())
        if (!a.act_left(op, x, k).is_zero() || !a.act_right(op, k, x).is_zero())
          trivial = false;
  rep.add("Im mu acts trivially on Ann(L)", trivial);

  if (!ideal || !trivial || !ann.contains(ker)) {
    rep.add("induced action of D/Im mu on Ker mu", false, "skipped after an earlier failure");
    return rep;
  }
  auto q = quotient_algebra(d, img);
  Matrix lift = q.lift();
  Algebra kalg = Algebra::abelian(l.flavor(), l.field(), ker.dim());
  Action ind = Action::trivial(q.algebra, kalg);
  Matrix kc = ker.coordinate_matrix();
  bool stable = true;
  for (std::size_t op = 0; op < d.ops(); ++op)
    for (std::size_t i = 0; i < q.algebra.dim(); ++i)
      for (std::size_t j = 0; j < ker.dim(); ++j) {
        Vector x = lift.column(i);
        Vector xl = a.act_left(op, x, ker.basis()[j]);
        Vector lx = a.act_right(op, ker.basis()[j], x);
        if (!ker.contains(xl) || !ker.contains(lx)) {
          stable = false;
          continue;
        }
        ind.left[op].at(i, j) = kc.apply(xl);
        ind.right[op].at(j, i) = kc.apply(lx);
      }
  rep.add("Ker mu stable under the action", stable);
  auto ar = stable ? check_action(ind) : Report();
  rep.add("induced action of D/Im mu on Ker mu", stable && ar.ok(), ar.summary());
  return rep;
}

LemmaCounters lemma_counters() { return {g_lemma_runs.load(), g_lemma_failures.load()}; }

CrossedModule CrossedModule::make(Matrix mu, Action act) {
  auto rep = check_crossed(mu, act);
  if (!rep.ok())
    fail(Errc::InvalidCrossedModule, "not a crossed module: " + rep.summary());
  act.actor = act.actor.certify();
  act.actee = act.actee.certify();
  ++g_lemma_runs;
  auto lem = lemma_crossed_checks(mu, act);
  if (!lem.ok()) {
    ++g_lemma_failures;
    fail(Errc::LemmaViolation, "structural lemma fails: " + lem.summary());
  }
  return CrossedModule(std::move(mu), std::move(act));
}

Report check_xmod_morphism(const CrossedModule &s, const CrossedModule &t, const Matrix &alpha,
                           const Matrix &beta) {
  if (s.flavor() != t.flavor())
    fail(Errc::FlavorMismatch, "crossed-module morphism between different flavors");
  Report rep;
  rep.merge("alpha", check_morphism(s.source(), t.source(), alpha));
  rep.merge("beta", check_morphism(s.target(), t.target(), beta));
  bool sq = t.mu() * alpha == beta * s.mu();
  rep.add("mu' alpha = beta mu", sq);
  const Algebra &d = s.target(), &l = s.source();
  auto acol = alpha.column_list();
  auto bcol = beta.column_list();
  for (std::size_t op = 0; op < d.ops(); ++op) {
    std::string o = op_symbol(s.flavor(), op);
    bool e1 = true, e2 = true;
    std::string d1, d2;
    for (std::size_t i = 0; i < d.dim(); ++i)
      for (std::size_t j = 0; j < l.dim(); ++j) {
        if (e1 && alpha.apply(s.action().left[op].at(i, j)) !=
                      t.action().act_left(op, bcol[i], acol[j])) {
          e1 = false;
          d1 = "x=" + std::to_string(i) + " l=" + std::to_string(j);
        }
        if (e2 && alpha.apply(s.action().right[op].at(j, i)) !=
                      t.action().act_right(op, acol[j], bcol[i])) {
          e2 = false;
          d2 = "x=" + std::to_string(i) + " l=" + std::to_string(j);
        }
      }
    rep.add("alpha(x" + o + "l) = beta(x)" + o + "alpha(l)", e1, d1);
    rep.add("alpha(l" + o + "x) = alpha(l)" + o + "beta(x)", e2, d2);
  }
  return rep;
}

bool is_xmod_isomorphism(const CrossedModule &s, const CrossedModule &t, const Matrix &alpha,
                         const Matrix &beta) {
  Matrix inv;
  return check_xmod_morphism(s, t, alpha, beta).ok() && invert(alpha, inv) && invert(beta, inv);
}

Report semidirect_homomorphism_checks(const Matrix &mu, const Action &a) {
  const Algebra &l = a.actee, &d = a.actor;
  Field f = d.field();
  std::size_t nl = l.dim(), nd = d.dim();
  Report rep;
  auto ld = semidirect_product(a, false);
  {
    auto dd = semidirect_product(self_action(d), false);
    Matrix m(f, 2 * nd, nl + nd);
    for (std::size_t r = 0; r < nd; ++r) {
      for (std::size_t c = 0; c < nl; ++c)
        m(r, c) = mu(r, c);
      m(nd + r, nl + r) = Scalar::one(f);
    }
    auto r = check_morphism(ld.algebra, dd.algebra, m);
    rep.add("(mu,id): L|xD -> D|xD", r.ok(), r.ok() ? "" : r.summary());
  }
  {
    auto ll = semidirect_product(self_action(l), false);
    Matrix m(f, nl + nd, 2 * nl);
    for (std::size_t r = 0; r < nl; ++r)
      m(r, r) = Scalar::one(f);
    for (std::size_t r = 0; r < nd; ++r)
      for (std::size_t c = 0; c < nl; ++c)
        m(nl + r, nl + c) = mu(r, c);
    auto r = check_morphism(ll.algebra, ld.algebra, m);
    rep.add("(id,mu): L|xL -> L|xD", r.ok(), r.ok() ? "" : r.summary());
  }
  {
    Matrix m(f, nl + nd, nl + nd);
    for (std::size_t r = 0; r < nl; ++r)
      m(r, r) = -Scalar::one(f);
    for (std::size_t r = 0; r < nd; ++r) {
      for (std::size_t c = 0; c < nl; ++c)
        m(nl + r, c) = mu(r, c);
      m(nl + r, nl + r) = Scalar::one(f);
    }
    auto r = check_morphism(ld.algebra, ld.algebra, m);
    rep.add("(l,x) -> (-l, mu(l)+x)", r.ok(), r.ok() ? "" : r.summary());
  }
  return rep;
}

CrossedModule embed_zero(const Algebra &a) {
  Algebra zero = Algebra::abelian(a.flavor(), a.field(), 0);
  return CrossedModule::make(Matrix(a.field(), a.dim(), 0), Action::trivial(a, zero));
}

CrossedModule embed_identity(const Algebra &a) {
  return CrossedModule::make(Matrix::identity(a.field(), a.dim()), self_action(a));
}

QuotientAlgebra cokernel(const CrossedModule &x) {
  return quotient_algebra(x.target(), image(x.mu()));
}

} // namespace diacat
