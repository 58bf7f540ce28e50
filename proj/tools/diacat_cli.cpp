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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diacat/diacat.h"

namespace {

using Json = nlohmann::json;

struct Options {
  std::size_t trunc = 2;
  std::uint64_t seed = 20240229;
  bool verbose = false;
  std::string out;
  std::string flavor_override;
  std::string what, kind, path, action, name;
  std::vector<std::string> inputs;
};

struct Handle {
  diacat_object *p = nullptr;
  ~Handle() { diacat_object_free(p); }
};

struct Text {
  char *p = nullptr;
  ~Text() { diacat_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

int exit_code(diacat_status s) {
  switch (s) {
  case DIACAT_OK: return 0;
  case DIACAT_MATH_FAILURE: return 1;
  case DIACAT_INPUT_ERROR:
  case DIACAT_INVALID_ARGUMENT: return 2;
  case DIACAT_RESOURCE_CAP: return 3;
  default: return 4;
  }
}

int report_error(diacat_status s) {
  std::cerr << "diacat: " << diacat_last_error_kind() << ": " << diacat_last_error() << "\n";
  return exit_code(s);
}

bool read_file(const std::string &path, std::string &text) {
  std::ifstream in(path);
  if (!in)
    return false;
  std::stringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

bool write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path);
  out << text;
  return bool(out);
}

void set_flavor(Json &j, const std::string &f) {
  if (!j.is_object())
    return;
  if (j.contains("flavor"))
    j["flavor"] = f;
  for (const char *k : {"source", "target", "E", "D"})
    if (j.contains(k))
      set_flavor(j[k], f);
}

// A path to a document, or else the name of a bundled fixture.
diacat_status load(const std::string &arg, const std::string &flavor, Handle &h) {
  std::string text;
  if (!read_file(arg, text))
    return diacat_load_fixture(arg.c_str(), &h.p);
  if (!flavor.empty()) {
    try {
      Json j = Json::parse(text);
      set_flavor(j, flavor);
      text = j.dump();
    } catch (const Json::exception &) {
      // left to the library, which reports the position
    }
  }
  return diacat_load_document(text.c_str(), &h.p);
}

void human(const Json &r) {
  auto checks = [](const Json &list, const std::string &indent) {
    for (const auto &c : list) {
      std::cerr << indent << (c.value("pass", false) ? "PASS " : "FAIL ")
                << c.value("name", std::string());
      if (c.contains("detail"))
        std::cerr << ": " << c["detail"].get<std::string>();
      std::cerr << "\n";
    }
  };
  if (r.contains("verdict"))
    std::cerr << r["kind"].get<std::string>() << " (" << r.value("flavor", std::string())
              << "): " << r["verdict"].get<std::string>() << "\n";
  if (r.contains("checks"))
    checks(r["checks"], "  ");
  if (r.contains("certificate"))
    std::cerr << r["kind"].get<std::string>() << " -> " << r["output"].dump() << ", certificate "
              << r["certificate"].get<std::string>() << "\n";
  if (r.contains("results")) {
    for (const auto &it : r["results"]) {
      std::cerr << (it.value("passed", false) ? "PASS " : "FAIL ")
                << it.value("input", std::string());
      if (it.contains("got"))
        std::cerr << " [" << it["got"].get<std::string>() << ", expected "
                  << it["expected"].get<std::string>() << "]";
      if (it.contains("left"))
        std::cerr << " [" << it["left"] << " vs " << it["right"] << "]";
      if (it.contains("error"))
        std::cerr << ": " << it["error"].get<std::string>();
      std::cerr << "\n";
      if (it.contains("faces"))
        for (const auto &f : it["faces"])
          std::cerr << "  " << (f.value("passed", false) ? "PASS " : "FAIL ")
                    << f["square"].get<std::string>() << " [" << f["got"].get<std::string>()
                    << "]\n";
      if (it.contains("checks") && !it.value("passed", false))
        checks(it["checks"], "  ");
    }
    std::cerr << (r.value("passed", false) ? "all passed" : "FAILED") << " (" << r["count"]
              << " items)\n";
  }
}

int emit_report(const Text &t, const Options &o) {
  std::string s = t.str();
  std::cout << s;
  if (o.verbose && !s.empty())
    human(Json::parse(s));
  return 0;
}

int cmd_check(const Options &o) {
  Handle h;
  if (auto s = load(o.path, o.flavor_override, h); s != DIACAT_OK)
    return report_error(s);
  Text rep;
  diacat_status s = diacat_check(h.p, &rep.p);
  if (!rep.p)
    return report_error(s);
  emit_report(rep, o);
  return exit_code(s);
}

int cmd_construct(const Options &o) {
  std::vector<Handle> hs(o.inputs.size());
  std::vector<const diacat_object *> ptrs;
  for (std::size_t i = 0; i < o.inputs.size(); ++i) {
    if (auto s = load(o.inputs[i], "", hs[i]); s != DIACAT_OK)
      return report_error(s);
    ptrs.push_back(hs[i].p);
  }
  Handle out;
  Text rep;
  diacat_status s = diacat_construct(o.kind.c_str(), ptrs.data(), ptrs.size(), o.trunc, &out.p,
                                     &rep.p);
  if (!rep.p)
    return report_error(s);
  Text doc;
  if (diacat_status d = diacat_object_to_document(out.p, &doc.p); d != DIACAT_OK)
    return report_error(d);
  Json r = Json::parse(rep.str());
  if (o.out.empty()) {
    r["document"] = Json::parse(doc.str());
  } else if (!write_file(o.out, doc.str())) {
    std::cerr << "diacat: cannot write " << o.out << "\n";
    return 2;
  }
  std::cout << r.dump(2) << "\n";
  if (o.verbose)
    human(r);
  return exit_code(s);
}

int cmd_verify(const Options &o) {
  std::vector<Handle> hs(o.inputs.size());
  std::vector<const diacat_object *> ptrs;
  for (std::size_t i = 0; i < o.inputs.size(); ++i) {
    if (auto s = load(o.inputs[i], "", hs[i]); s != DIACAT_OK)
      return report_error(s);
    ptrs.push_back(hs[i].p);
  }
  Text rep;
  diacat_status s =
      diacat_verify(o.what.c_str(), ptrs.data(), ptrs.size(), o.trunc, o.seed, &rep.p);
  if (!rep.p)
    return report_error(s);
  emit_report(rep, o);
  return exit_code(s);
}

int cmd_fixtures(const Options &o) {
  if (o.action == "list") {
    Text t;
    if (auto s = diacat_fixture_names(&t.p); s != DIACAT_OK)
      return report_error(s);
    std::cout << t.str();
    if (o.verbose)
      for (const auto &f : Json::parse(t.str()))
        std::cerr << f["name"].get<std::string>() << " (" << f["kind"].get<std::string>()
                  << "): " << f["note"].get<std::string>() << "\n";
    return 0;
  }
  if (o.name.empty()) {
    std::cerr << "diacat: fixtures emit needs a name\n";
    return 2;
  }
  Handle h;
  if (auto s = diacat_load_fixture(o.name.c_str(), &h.p); s != DIACAT_OK)
    return report_error(s);
  Text doc;
  if (auto s = diacat_object_to_document(h.p, &doc.p); s != DIACAT_OK)
    return report_error(s);
  if (o.out.empty())
    std::cout << doc.str();
  else if (!write_file(o.out, doc.str())) {
    std::cerr << "diacat: cannot write " << o.out << "\n";
    return 2;
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  Options o;
  CLI::App app{"diacat: dialgebras, Leibniz algebras and their crossed modules"};
  app.require_subcommand(1);
  app.add_flag("-v,--verbose", o.verbose, "human-readable summary on stderr");
  app.set_version_flag("--version", std::string(diacat_version()));

  auto *check = app.add_subcommand("check", "run the flavor checker on a document");
  check->add_option("path", o.path, "document path or fixture name")->required();
  check->add_option("--flavor-override", o.flavor_override, "dias, lb, as or lie");

  auto *construct = app.add_subcommand("construct", "build an object from inputs");
  construct->add_option("kind", o.kind, "construction kind")->required();
  construct->add_option("inputs", o.inputs, "document paths or fixture names");
  construct->add_option("--trunc", o.trunc, "nilpotent truncation N")->check(CLI::Range(1, 8));
  construct->add_option("--out", o.out, "write the constructed document here");

  auto *verify = app.add_subcommand("verify", "run a verification battery");
  verify->add_option("what", o.what,
                     "square:<id>, adjunction:ud|xud|chain:<i>, equivalence:cat1|internal, "
                     "parallelepiped or property:semidirect")
      ->required();
  verify->add_option("inputs", o.inputs, "document paths or fixture names (default: bundled)");
  verify->add_option("--trunc", o.trunc, "nilpotent truncation N")->check(CLI::Range(1, 8));
  verify->add_option("--seed", o.seed, "seed for randomized batteries");

  auto *fixtures = app.add_subcommand("fixtures", "list or emit the bundled corpus");
  fixtures->add_option("action", o.action, "list or emit")
      ->required()
      ->check(CLI::IsMember({"list", "emit"}));
  fixtures->add_option("name", o.name, "fixture to emit");
  fixtures->add_option("--out", o.out, "write the document here");

  for (auto *sub : {check, construct, verify, fixtures})
    sub->add_flag("-v,--verbose", o.verbose, "human-readable summary on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (check->parsed())
    return cmd_check(o);
  if (construct->parsed())
    return cmd_construct(o);
  if (verify->parsed())
    return cmd_verify(o);
  return cmd_fixtures(o);
}
