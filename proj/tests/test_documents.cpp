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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "diacat/commands.hpp"
#include "diacat/error.hpp"
#include "diacat/fixtures.hpp"
#include "test_util.hpp"

using namespace diacat;
using namespace testutil;

namespace {

Errc parse_error_code(const std::string &text, std::string *msg = nullptr) {
  try {
    parse_document(text);
  } catch (const Error &e) {
    if (msg)
      *msg = e.what();
    return e.code();
  }
  return Errc::Internal;
}

const char *kFfe = R"({"field": "Fp", "p": 2, "flavor": "lb", "dim": 2,
                      "bracket": [[1, 1, 0, "1"]]})";

} // namespace

TEST_CASE("reading an algebra") {
  Object o = parse_document(kFfe);
  REQUIRE(std::holds_alternative<Algebra>(o));
  CHECK(std::get<Algebra>(o) == ffe());
  CHECK(std::string(object_kind(o)) == "algebra");
}

TEST_CASE("emit then parse is the identity on every fixture") {
  REQUIRE(fixture_registry().size() >= 12);
  for (const auto &info : fixture_registry()) {
    CAPTURE(info.name);
    Object o = fixture_object(info.name);
    std::string text = dump(object_to_json(o));
    CHECK(text.back() == '\n');
    Object back = parse_document(text);
    CHECK(std::string(object_kind(back)) == info.kind);
    CHECK(dump(object_to_json(back)) == text);
  }
}

TEST_CASE("rational coefficients survive") {
  Algebra a = Algebra::make(Flavor::Assoc, Q, 2, {tensor(Q, 2, {{0, 0, 1, 3}})});
  std::string text = dump(algebra_to_json(a));
  CHECK(text.find("\"3\"") != std::string::npos);
  CHECK(std::get<Algebra>(parse_document(text)) == a);
  Object half = parse_document(
      R"({"field": "Q", "flavor": "as", "dim": 2, "product": [[0, 0, 1, "-1/2"]]})");
  CHECK(std::get<Algebra>(half).product().at(0, 0)[1] == Scalar::parse(Q, "-1/2"));
}

TEST_CASE("errors name their location") {
  std::string msg;
  CHECK(parse_error_code("{", &msg) == Errc::ParseError);
  CHECK(msg.find("malformed JSON") != std::string::npos);
  CHECK(parse_error_code(R"({"field": "Q", "flavor": "as", "dim": 1, "product": [[0, 0, 0, "1/0"]]})",
                         &msg) == Errc::ParseError);
  CHECK(msg.find("/product/0/3") != std::string::npos);
  CHECK(parse_error_code(R"({"field": "Q", "flavor": "as", "dim": 1, "product": [[0, 3, 0, "1"]]})",
                         &msg) == Errc::ParseError);
  CHECK(msg.find("/product/0/1") != std::string::npos);
  CHECK(parse_error_code(R"({"field": "Q", "flavor": "as", "dim": 1, "product": [[0, 0, 0, "1"], [0, 0, 0, "1"]]})") ==
        Errc::ParseError);
  CHECK(parse_error_code(R"({"field": "Q", "flavor": "as", "dim": 1, "extra": 1})", &msg) ==
        Errc::ParseError);
  CHECK(msg.find("extra") != std::string::npos);
  CHECK(parse_error_code(R"({"field": "Q", "flavor": "nope", "dim": 1})", &msg) ==
        Errc::ParseError);
  CHECK(msg.find("/flavor") != std::string::npos);
}

TEST_CASE("a crossed module with mismatched fields") {
  Json j = xmod_to_json(fixture_xmod("xlb-ideal"));
  j["target"]["field"] = "Q";
  j["target"].erase("p");
  CHECK_THROWS_AS(object_from_json(j), Error);
  Json k = xmod_to_json(fixture_xmod("xlb-ideal"));
  k["mu"] = Json::array();
  CHECK_THROWS_AS(object_from_json(k), Error);
}

TEST_CASE("running the checker") {
  CommandResult good = run_check(fixture_object("dias-abelian-2"));
  CHECK(good.passed);
  CHECK(good.report["kind"] == "algebra");
  CommandResult bad = run_check(fixture_object("dias-bad-1"));
  CHECK_FALSE(bad.passed);
  CommandResult x = run_check(fixture_object("xlb-ideal"));
  CHECK(x.passed);
  CommandResult c = run_check(fixture_object("cat1-ideal"));
  CHECK(c.passed);
  CommandResult i = run_check(fixture_object("internal-ideal"));
  CHECK(i.passed);
}

TEST_CASE("constructions") {
  CommandResult u = run_construct("Ud", {fixture_object("leibniz-ff-e")}, 2);
  REQUIRE(u.output.has_value());
  CHECK(std::get<Algebra>(*u.output).flavor() == Flavor::Dias);
  CHECK(u.report["trunc"] == 2);
  CommandResult f = run_construct("free-dias:2", {}, 2);
  CHECK(std::get<Algebra>(*f.output).dim() == 10);
  CommandResult t = run_construct("tensor:1:Q", {}, 3);
  CHECK(std::get<Algebra>(*t.output).field() == Q);
  CommandResult xu = run_construct("XUd", {fixture_object("xlb-ideal")}, 2);
  CHECK(xu.passed);
  CHECK(xu.report["details"]["X_dim"] == 1);
  CommandResult cat1 = run_construct("cat1", {fixture_object("xlb-ideal")}, 0);
  CHECK(std::string(object_kind(*cat1.output)) == "cat1");
  CHECK_THROWS_AS(run_construct("nope", {}, 2), Error);
  CHECK_THROWS_AS(run_construct("Ud", {}, 2), Error);
  for (const auto &k : construct_kinds())
    CHECK(!k.empty());
}

TEST_CASE("verification commands") {
  CommandResult sq = run_verify("square:LbDias-XUd-J0", {}, 2, 1);
  CHECK(sq.passed);
  CHECK(sq.report["count"].get<int>() > 0);
  CommandResult eq = run_verify("equivalence:cat1", {}, 2, 1);
  CHECK(eq.passed);
  CommandResult prop = run_verify("property:semidirect", {}, 2, 7);
  CHECK(prop.passed);
  CHECK(prop.report["results"][0]["discrepancies"] == 0);
  CommandResult same = run_verify("property:semidirect", {}, 2, 7);
  CHECK(same.report == prop.report);
  CHECK_THROWS_AS(run_verify("nope", {}, 2, 1), Error);
}
