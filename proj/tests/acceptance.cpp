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
// Acceptance run: one PASS/FAIL line per criterion 1-10, with timings.
// Exit status is the number of failing criteria.

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "diacat/commands.hpp"
#include "diacat/error.hpp"
#include "diacat/fixtures.hpp"

using namespace diacat;

namespace {

const Field F2 = Field::prime(2);

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Oracle for criterion 1: products stored as bit masks, the five identities
// tested on every triple of vectors of F2^n (not only basis triples).
struct BitDias {
  std::size_t n;
  // m[op][i][j] = bit mask of b_i op b_j
  std::array<std::array<std::array<unsigned, 2>, 2>, 2> m{};

  unsigned mul(int op, unsigned u, unsigned v) const {
    unsigned r = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((u >> i & 1) && (v >> j & 1))
          r ^= m[op][i][j];
    return r;
  }

  bool satisfies() const {
    const int L = 0, R = 1;
    unsigned top = 1u << n;
    for (unsigned x = 0; x < top; ++x)
      for (unsigned y = 0; y < top; ++y)
        for (unsigned z = 0; z < top; ++z) {
          if (mul(L, mul(L, x, y), z) != mul(L, x, mul(L, y, z)))
            return false;
          if (mul(L, mul(L, x, y), z) != mul(L, x, mul(R, y, z)))
            return false;
          if (mul(L, mul(R, x, y), z) != mul(R, x, mul(L, y, z)))
            return false;
          if (mul(R, mul(L, x, y), z) != mul(R, x, mul(R, y, z)))
            return false;
          if (mul(R, mul(R, x, y), z) != mul(R, x, mul(R, y, z)))
            return false;
        }
    return true;
  }
};

// bits of `code`: op, then i, j, then output coordinate k
Bilinear tensor_of(std::uint32_t code, std::size_t n, int op) {
  Bilinear t(F2, n);
  std::size_t per = n * n * n, b = op * per;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k, ++b)
        if (code >> b & 1)
          t.at(i, j)[k] = Scalar::from_int(F2, 1);
  return t;
}

BitDias bits_of(std::uint32_t code, std::size_t n) {
  BitDias d{n};
  std::size_t b = 0;
  for (int op = 0; op < 2; ++op)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k, ++b)
          if (code >> b & 1)
            d.m[op][i][j] |= 1u << k;
  return d;
}

std::vector<Algebra> found; // valid dialgebras from criterion 1

Outcome criterion1() {
  std::size_t total = 0, agree = 0, valid = 0;
  for (std::size_t n = 1; n <= 2; ++n) {
    std::uint32_t count = 1u << (2 * n * n * n);
    for (std::uint32_t code = 0; code < count; ++code) {
      Bilinear l = tensor_of(code, n, 0), r = tensor_of(code, n, 1);
      bool lib = check_dialgebra(l, r).ok();
      bool oracle = bits_of(code, n).satisfies();
      ++total;
      agree += lib == oracle;
      if (lib) {
        ++valid;
        found.push_back(Algebra::make(Flavor::Dias, F2, n, {l, r}));
      }
    }
  }
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) +
                              " tensor pairs agree, " + std::to_string(valid) + " dialgebras"};
}

Outcome criterion2() {
  std::size_t ok = 0, thrown = 0;
  for (const auto &d : found) {
    try {
      ok += check_leibniz(lb(d).product()).ok();
    } catch (const std::exception &) {
      ++thrown;
    }
  }
  return {ok == found.size() && thrown == 0 && !found.empty(),
          std::to_string(ok) + "/" + std::to_string(found.size()) + " Leibnizations pass, " +
              std::to_string(thrown) + " exceptions"};
}

Outcome criterion3() {
  CommandResult r = run_verify("property:semidirect", {}, 2, 20240229);
  const Json &j = r.report["results"][0];
  bool pass = r.passed && j["discrepancies"] == 0 && j["random_candidates"] == 1000;
  return {pass, "both pass " + j["both_pass"].dump() + ", both fail " + j["both_fail"].dump() +
                    ", discrepancies " + j["discrepancies"].dump()};
}

Outcome criterion4() {
  std::size_t objects = 0, ok = 0;
  for (const auto &name : fixture_names("xmod")) {
    ++objects;
    ok += verify_xmod_roundtrip(fixture_xmod(name)).ok();
  }
  for (const auto &name : fixture_names("cat1")) {
    ++objects;
    ok += verify_cat1_roundtrip(fixture_cat1(name)).ok();
  }
  for (const auto &name : fixture_names("internal")) {
    InternalCategory ic = fixture_internal(name);
    ++objects;
    ok += verify_cat1_roundtrip(ic.base).ok() && psi(ic) == phi(ic.base);
  }
  return {objects >= 8 && ok == objects,
          std::to_string(ok) + "/" + std::to_string(objects) + " objects round-trip"};
}

Outcome battery(const std::string &what, std::size_t at_least) {
  CommandResult r = run_verify(what, {}, 2, 1);
  std::size_t n = 0, equal = 0;
  std::string sizes;
  for (const auto &item : r.report["results"]) {
    ++n;
    if (item.contains("left") && item["left"] == item["right"] && item["passed"] == true)
      ++equal;
    if (item.contains("left"))
      sizes += " " + item["left"].dump();
  }
  return {r.passed && n >= at_least && equal == n,
          std::to_string(equal) + "/" + std::to_string(n) + " pairs, |Hom|:" + sizes};
}

Outcome criterion7() {
  std::size_t n = 0, ok = 0;
  std::string got;
  for (const auto &name : fixture_names("algebra")) {
    Algebra a = fixture_algebra(name);
    if (a.flavor() != Flavor::Leibniz)
      continue;
    ++n;
    SquareResult j0 = check_square("LbDias-XUd-J0", a, 2);
    SquareResult j1 = check_square("LbDias-XUd-J1", a, 2);
    ok += j0.got == Verdict::Equal && j1.got == Verdict::Isomorphic && j1.report.ok();
    got += " " + name + ":" + verdict_name(j0.got) + "/" + verdict_name(j1.got);
  }
  return {n > 0 && ok == n, std::to_string(ok) + "/" + std::to_string(n) + got};
}

Outcome criterion8() {
  const std::vector<std::string> ids = {"AsLie-I0",        "AsLie-I1",        "AsDias-I0",
                                        "AsDias-I1",       "LieLb-I0",        "LieLb-I1",
                                        "AsLie-XU-I0",     "AsLie-XU-I1",     "AsDias-XAS-J0",
                                        "AsDias-XAS-J1",   "LieLb-XLiel-J0",  "LieLb-XLiel-J1"};
  std::vector<SquareInput> inputs;
  for (const auto &name : fixture_names("algebra")) {
    Algebra a = fixture_algebra(name);
    if (a.check().ok())
      inputs.push_back(a);
  }
  for (const auto &name : fixture_names("xmod"))
    inputs.push_back(fixture_xmod(name));
  std::size_t runs = 0, ok = 0;
  std::string bad;
  for (const auto &id : ids) {
    const SquareInfo &info = square_info(id);
    for (const auto &in : inputs) {
      if (category_of(in) != info.source)
        continue;
      ++runs;
      SquareResult r = check_square(id, in, 2);
      if (r.passed())
        ++ok;
      else if (bad.empty())
        bad = " first failure " + id + ": " + r.report.summary();
    }
  }
  std::size_t faces = 0, face_ok = 0, cubes = 0;
  for (const auto &name : fixture_names("xmod")) {
    CrossedModule x = fixture_xmod(name);
    if (x.field() != F2)
      continue;
    ++cubes;
    FaceReport f = check_parallelepiped(x, 2);
    for (const auto &s : f.faces) {
      ++faces;
      face_ok += s.passed();
      if (!s.passed() && bad.empty())
        bad = " first failure " + s.id + ": " + s.report.summary();
    }
  }
  return {runs > 0 && ok == runs && faces > 0 && face_ok == faces,
          std::to_string(ok) + "/" + std::to_string(runs) + " squares, " +
              std::to_string(face_ok) + "/" + std::to_string(faces) + " faces on " +
              std::to_string(cubes) + " inputs" + bad};
}

Outcome criterion10() {
  LemmaCounters c = lemma_counters();
  return {c.runs > 0 && c.failures == 0, std::to_string(c.runs) + " runs, " +
                                             std::to_string(c.failures) + " failures"};
}

} // namespace

int main() {
  struct Crit {
    int id;
    const char *title;
    double limit_s; // 0 = none
    std::function<Outcome()> run;
  };
  std::vector<Crit> crits = {
      {1, "dialgebra checker against the direct-expansion oracle", 60, criterion1},
      {2, "Leibnization of every dialgebra found", 0, criterion2},
      {3, "crossed module iff semidirect homomorphisms", 0, criterion3},
      {4, "cat1 and internal-category round trips", 30, criterion4},
      {5, "Ud -| LB bijections", 0, [] { return battery("adjunction:ud", 5); }},
      {6, "XUd -| XLB bijections", 0, [] { return battery("adjunction:xud", 3); }},
      {7, "LbDias-XUd squares on the Leibniz fixtures", 0, criterion7},
      {8, "AsLie, AsDias, LieLb squares and the parallelepiped", 300, criterion8},
      {9, "adjunction chains i = 0, 1", 0,
       [] {
         Outcome a = battery("adjunction:chain:0", 1), b = battery("adjunction:chain:1", 1);
         return Outcome{a.pass && b.pass, "i=0 " + a.detail + "; i=1 " + b.detail};
       }},
      {10, "structural lemma on every crossed module built", 0, criterion10},
  };
  int failed = 0;
  for (const auto &c : crits) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && s > c.limit_s) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(int(c.limit_s)) + " s limit)";
    }
    failed += !o.pass;
    std::printf("criterion %2d: %s  [%.2f s]  %s: %s\n", c.id, o.pass ? "PASS" : "FAIL", s,
                c.title, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
